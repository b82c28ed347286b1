#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncmoments/partition.hpp"
#include "ncmoments/rational.hpp"
#include "ncmoments/word.hpp"

namespace ncmoments {

/// Default cap on the ground size of a ColorPoset for exact extension
/// counting.  The subset DP allocates 2^ground counters, and 22 keeps that
/// (and the counts themselves, at most 22!) comfortably bounded.
inline constexpr int kDefaultMaxPoset = 22;

/// A strict partial order on the block colors of a pairing.  Element 0 is
/// the color of the imaginary block, elements 1..s the colors of the real
/// blocks (indexed as in PairPartition).  Each pair (a, b) asserts
/// color_a < color_b.  Orders arising from region constraints are forests,
/// but the type accepts any irreflexive relation.
struct ColorPoset {
    int ground = 0;
    std::vector<std::pair<int, int>> less;

    ColorPoset() = default;
    ColorPoset(int ground_size, std::vector<std::pair<int, int>> relations);
};

/// The ordering constraints that carve out the region of integration for an
/// adapted pairing: one constraint per real block, against its nearest outer
/// block, in block order.
///
///  - EtaMode: a block whose left leg is starred sits below its outer block
///    (block < outer); a block whose right leg is starred sits above it.
///  - CreationMode: every block sits below its outer block, which is the
///    triangle-indicator case handled by creation_moment.
///
/// Throws NotAdapted when p is not adapted to w in the given mode.
ColorPoset region_constraints(const PairPartition& p, const StarWord& w,
                              AdaptednessMode mode);

/// Exact number of linear extensions of the poset (strict total orders on
/// {0, ..., ground-1} refining it).  Dynamic program over downsets indexed
/// by bitmask; 2^ground counters.  Within the enforced limit every count
/// fits in 128 bits (ground <= 22 gives counts <= 22! < 2^70), so the DP
/// runs on fixed-width integers and widens only on return.  A cyclic
/// relation has no extensions and yields 0.
BigInt count_linear_extensions(const ColorPoset& poset, int max_ground = kDefaultMaxPoset);

/// Lebesgue volume of the region of the unit cube [0,1]^(s+1) cut out by the
/// region constraints of (p, w): number of linear extensions divided by
/// (s+1)!.  The empty partition has volume 1.
Rational volume(const PairPartition& p, const StarWord& w, AdaptednessMode mode);

/// Monte Carlo estimate of the same region volume, for cross-checks.
struct VolumeEstimate {
    double estimate = 0.0;
    double stderr_est = 0.0;
    std::int64_t samples = 0;
};

/// Samples uniform points of the unit cube and counts how many satisfy all
/// constraints (strictly by default; with strict = false, ties count too —
/// ties have probability zero, so both readings estimate the same volume).
/// Deterministic for a fixed seed.
VolumeEstimate monte_carlo_volume(const ColorPoset& poset, std::int64_t samples,
                                  std::uint64_t seed, bool strict = true);

}  // namespace ncmoments
