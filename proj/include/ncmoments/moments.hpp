#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncmoments/partition.hpp"
#include "ncmoments/profile.hpp"
#include "ncmoments/rational.hpp"
#include "ncmoments/volumes.hpp"
#include "ncmoments/word.hpp"

namespace ncmoments {

/// Which operator family a *-word is evaluated against.
///
///  - Circular: the standard circular family; every adapted pairing counts 1.
///  - Triangular: the triangular family; each adapted pairing contributes the
///    volume of its region (block color below outer color when the block's
///    left leg is starred, above otherwise).
///  - LowerTriangular: same with every comparison reversed.
///  - Profile: a family with piecewise-constant variance; each adapted
///    pairing contributes its colored weight under the profile.
struct OperatorSpec {
    enum class Kind { Circular, Triangular, LowerTriangular, Profile };

    Kind kind = Kind::Circular;
    std::optional<VarianceProfile> profile;

    static OperatorSpec circular() { return {Kind::Circular, std::nullopt}; }
    static OperatorSpec triangular() { return {Kind::Triangular, std::nullopt}; }
    static OperatorSpec lower_triangular() { return {Kind::LowerTriangular, std::nullopt}; }
    static OperatorSpec with_profile(VarianceProfile p) {
        return {Kind::Profile, std::move(p)};
    }
};

/// An exact moment together with its per-pairing breakdown.  `value` is
/// always the exact sum of the contributions, which are listed in canonical
/// pairing order.
struct MomentResult {
    Rational value;
    std::vector<std::pair<PairPartition, Rational>> contributions;
};

/// The *-moment of the word w in the family described by spec: the sum over
/// adapted noncrossing pairings of their weights.  Words of odd length, and
/// words none of whose pairings match labels, have moment 0.  The empty word
/// has moment 1 (the empty pairing contributes 1).
MomentResult eta_moment(const StarWord& w, const OperatorSpec& spec,
                        int max_ground = kDefaultMaxGround);

/// Region indicator attached to one position of a creation/annihilation
/// word: the full square (no constraint), the strict upper triangle
/// (inner variable below outer), or the strict lower triangle.
enum class RegionIndicator { Full, UpperTriangle, LowerTriangle };

/// Vacuum expectation of a product of creation and annihilation operators
/// smeared with region indicators, one per position.  At most one noncrossing
/// pairing is adapted in creation mode; the moment is the volume of the
/// region its constraints cut out, or 0 when there is no adapted pairing or
/// some block's two positions carry different indicators (their overlap is
/// not an indicator of the same kind, and mixed blocks do not arise in the
/// products this library targets).  The empty word has moment 1.
Rational creation_moment(const StarWord& w, const std::vector<RegionIndicator>& regions,
                         int max_ground = kDefaultMaxGround);

/// Closed form for the 2n-th alternating moment of the triangular family:
/// n^n / (n+1)!.
Rational triangular_moment_closed_form(int n);

/// Exact moments of w under grid refinements of the triangular (or circular)
/// indicator: for each r in rs, the Profile moment with the r x r grid.  As
/// r doubles, the triangular values increase toward the Triangular moment.
std::vector<std::pair<int, Rational>> profile_refinement_sequence(
    const StarWord& w, OperatorSpec::Kind kind, const std::vector<int>& rs,
    int max_ground = kDefaultMaxGround);

/// Colored weight of a single adapted pairing under a profile: the sum over
/// all colorings of the blocks (and the imaginary block) of the product of
/// cell values — the cell is (block color, outer color) when the block's
/// left leg is starred, (outer color, block color) otherwise — times the
/// widths of all chosen colors.  Computed by a sweep over the nesting forest
/// costing O(s r^2).
Rational profile_weight(const PairPartition& p, const StarWord& w,
                        const VarianceProfile& profile);

}  // namespace ncmoments
