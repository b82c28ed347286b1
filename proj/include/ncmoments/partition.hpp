#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncmoments/errors.hpp"
#include "ncmoments/word.hpp"

namespace ncmoments {

/// Default cap on the ground-set size m for pair-partition enumeration.
/// C_10 = 16796 partitions at m = 20; beyond that enumeration output grows
/// fast enough that callers must opt in explicitly.
inline constexpr int kDefaultMaxGround = 20;

/// How a pairing must relate to a *-word to contribute to a moment.
///
///  - CreationMode: each block {i, j} with i < j pairs a starred letter at i
///    with an unstarred one at j carrying the same label (annihilation acts
///    to the right of the matching creation).  A word admits at most one such
///    pairing.
///  - EtaMode: each block pairs one starred and one unstarred letter with the
///    same label, in either order.  This is the mode for *-moments of a
///    single family of operators.
enum class AdaptednessMode { CreationMode, EtaMode };

/// Relative star placement of a block and its nearest outer block; see
/// classify_block_pair.  Numbering: Type1 = inner right leg + outer left leg
/// starred, Type2 = inner left + outer right, Type3 = both left legs,
/// Type4 = both right legs.
enum class BlockPairType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

/// A noncrossing pair partition of {1, ..., m}.
///
/// Blocks are stored as (left, right) pairs with 1-based positions, sorted by
/// left leg; block indices are 1-based (block k is the k-th in that order).
/// Index 0 names the imaginary block {0, m+1} that encloses everything; it is
/// never stored.  The nearest-outer map is computed on construction in the
/// same stack pass that checks the noncrossing property.
class PairPartition {
public:
    using Block = std::pair<int, int>;

    /// The empty partition of the empty ground set.
    PairPartition() : m_(0) {}

    /// Validates that `blocks` is a noncrossing perfect pairing of
    /// {1, ..., m} sorted by left leg.
    PairPartition(int m, std::vector<Block> blocks);

    int ground_size() const { return m_; }

    /// Number of blocks s = m/2.
    int size() const { return static_cast<int>(blocks_.size()); }

    /// Block with 1-based index k.
    const Block& block(int k) const;

    const std::vector<Block>& blocks() const { return blocks_; }

    /// Index of the nearest outer block of block k: the innermost block whose
    /// interval strictly contains block k's, or 0 for the imaginary block.
    int nearest_outer(int k) const;

    /// Nesting depth of block k: 1 for blocks directly under the imaginary
    /// block, one more for each enclosing block.
    int depth(int k) const;

    /// Compact text form "[[1,6],[2,5],[3,4]]", also used as a map key.
    std::string to_string() const;

    friend auto operator<=>(const PairPartition&, const PairPartition&) = default;

private:
    int m_;
    std::vector<Block> blocks_;
    std::vector<int> outer_;  // outer_[k-1] = nearest outer of block k
};

/// All noncrossing pair partitions of {1, ..., m} in canonical order
/// (lexicographic on the sorted block lists).  m must be even; the count is
/// the Catalan number C_{m/2}.  m = 0 yields exactly the empty partition.
std::vector<PairPartition> enumerate_nc2(int m, int max_ground = kDefaultMaxGround);

/// Whether p is adapted to word w in the given mode.  The word length must
/// equal the ground-set size.  The empty partition is adapted to the empty
/// word.
bool is_adapted(const PairPartition& p, const StarWord& w, AdaptednessMode mode);

/// The adapted noncrossing pair partitions of w, in canonical order.  Words
/// of odd length have none.
std::vector<PairPartition> adapted_partitions(const StarWord& w, AdaptednessMode mode,
                                              int max_ground = kDefaultMaxGround);

/// Classifies the star placement of block k relative to its nearest outer
/// block under w (which must be EtaMode-adapted, so each block has exactly
/// one starred leg).  Throws NoOuterBlock when the nearest outer block is
/// the imaginary one, whose legs are unstarred and carry no star pattern.
BlockPairType classify_block_pair(const PairPartition& p, const StarWord& w, int k);

}  // namespace ncmoments
