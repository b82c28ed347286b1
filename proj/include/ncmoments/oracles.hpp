#pragma once

#include <utility>
#include <vector>

#include "ncmoments/partition.hpp"
#include "ncmoments/rational.hpp"

namespace ncmoments {

/// Forward declarations to avoid pulling the heavier headers in here.
struct ColorPoset;
struct VarianceProfile;

/// Brute-force reference implementations.  Each function deliberately takes
/// the most naive correct route (generate everything, filter, count) and
/// shares no code with the production algorithms it is used to check.
namespace oracles {

/// All perfect matchings of {1, ..., m} (not just noncrossing ones), built by
/// repeatedly pairing the smallest unmatched point.  Blocks sorted by left
/// leg.  (m-1)!! matchings, so keep m small.
std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int m);

/// The noncrossing matchings among all_perfect_matchings(m), filtered with a
/// quadratic leg-interleaving test and returned sorted lexicographically.
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings_by_filter(int m);

/// Number of linear extensions of the poset, counted by checking every
/// permutation of the ground set.  ground! permutations, so keep it small.
BigInt linear_extensions_by_permutations(const ColorPoset& poset);

/// Colored weight of one pairing under a variance profile, summed over all
/// r^(s+1) colorings of the blocks and the imaginary block directly.
Rational profile_weight_by_colorings(const PairPartition& p, const StarWord& w,
                                     const VarianceProfile& profile);

}  // namespace oracles
}  // namespace ncmoments
