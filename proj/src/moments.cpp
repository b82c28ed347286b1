#include "ncmoments/moments.hpp"

#include <algorithm>

namespace ncmoments {

namespace {

/// Volume weight with optionally reversed comparisons (for the lower
/// triangular family every "below" becomes "above"; the extension count of
/// the reversed order equals that of the dual poset).
Rational volume_weight(const PairPartition& p, const StarWord& w, bool reversed) {
    ColorPoset poset = region_constraints(p, w, AdaptednessMode::EtaMode);
    if (reversed) {
        for (auto& [a, b] : poset.less) {
            std::swap(a, b);
        }
    }
    return Rational(count_linear_extensions(poset), factorial(poset.ground));
}

}  // namespace

Rational profile_weight(const PairPartition& p, const StarWord& w,
                        const VarianceProfile& profile) {
    if (!is_adapted(p, w, AdaptednessMode::EtaMode)) {
        throw NotAdapted("profile_weight: pairing " + p.to_string() +
                         " is not adapted to word '" + w.to_string() + "'");
    }
    const int r = profile.r;
    const int s = p.size();
    // children[o] = blocks whose nearest outer block is o (0 = imaginary).
    std::vector<std::vector<int>> children(static_cast<size_t>(s) + 1);
    for (int k = 1; k <= s; ++k) {
        children[static_cast<size_t>(p.nearest_outer(k))].push_back(k);
    }
    // Sweep the nesting forest bottom-up.  For block k and a tentative outer
    // color t, accumulate
    //   G_k(t) = sum_c width(c) * cell(k; c, t) * prod_{j child of k} G_j(c),
    // where cell(k; c, t) is values[c][t] when k's left leg is starred and
    // values[t][c] otherwise.  Blocks sorted by left leg put every child
    // after its parent, so one right-to-left pass suffices.
    std::vector<std::vector<Rational>> g(
        static_cast<size_t>(s) + 1,
        std::vector<Rational>(static_cast<size_t>(r), Rational(0)));
    for (int k = s; k >= 1; --k) {
        const bool left_starred = w.letter(p.block(k).first).starred;
        for (int t = 0; t < r; ++t) {
            Rational acc;
            for (int c = 0; c < r; ++c) {
                Rational term = profile.width(c) *
                                (left_starred ? profile.value(c, t) : profile.value(t, c));
                if (term.is_zero()) {
                    continue;
                }
                for (int j : children[static_cast<size_t>(k)]) {
                    term *= g[static_cast<size_t>(j)][static_cast<size_t>(c)];
                    if (term.is_zero()) break;
                }
                acc += term;
            }
            g[static_cast<size_t>(k)][static_cast<size_t>(t)] = std::move(acc);
        }
    }
    // Close over the color of the imaginary block.
    Rational total;
    for (int t = 0; t < r; ++t) {
        Rational term = profile.width(t);
        for (int j : children[0]) {
            term *= g[static_cast<size_t>(j)][static_cast<size_t>(t)];
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

MomentResult eta_moment(const StarWord& w, const OperatorSpec& spec, int max_ground) {
    if (spec.kind == OperatorSpec::Kind::Profile && !spec.profile.has_value()) {
        throw InvalidArgument("eta_moment: Profile spec without a profile");
    }
    MomentResult out;
    if (w.size() % 2 != 0) {
        return out;
    }
    for (PairPartition& p : adapted_partitions(w, AdaptednessMode::EtaMode, max_ground)) {
        Rational weight;
        switch (spec.kind) {
            case OperatorSpec::Kind::Circular:
                weight = Rational(1);
                break;
            case OperatorSpec::Kind::Triangular:
                weight = volume_weight(p, w, /*reversed=*/false);
                break;
            case OperatorSpec::Kind::LowerTriangular:
                weight = volume_weight(p, w, /*reversed=*/true);
                break;
            case OperatorSpec::Kind::Profile:
                weight = profile_weight(p, w, *spec.profile);
                break;
        }
        out.value += weight;
        out.contributions.emplace_back(std::move(p), std::move(weight));
    }
    return out;
}

Rational creation_moment(const StarWord& w, const std::vector<RegionIndicator>& regions,
                         int max_ground) {
    if (static_cast<int>(regions.size()) != w.size()) {
        throw LengthMismatch("creation_moment: " + std::to_string(regions.size()) +
                             " regions for word of length " + std::to_string(w.size()));
    }
    if (w.size() % 2 != 0) {
        return Rational(0);
    }
    const auto adapted = adapted_partitions(w, AdaptednessMode::CreationMode, max_ground);
    if (adapted.empty()) {
        return Rational(0);
    }
    const PairPartition& p = adapted.front();
    std::vector<std::pair<int, int>> less;
    for (int k = 1; k <= p.size(); ++k) {
        const auto& [l, rr] = p.block(k);
        const RegionIndicator region = regions[static_cast<size_t>(l) - 1];
        if (region != regions[static_cast<size_t>(rr) - 1]) {
            return Rational(0);
        }
        switch (region) {
            case RegionIndicator::Full:
                break;
            case RegionIndicator::UpperTriangle:
                less.emplace_back(k, p.nearest_outer(k));
                break;
            case RegionIndicator::LowerTriangle:
                less.emplace_back(p.nearest_outer(k), k);
                break;
        }
    }
    const ColorPoset poset(p.size() + 1, std::move(less));
    return Rational(count_linear_extensions(poset), factorial(poset.ground));
}

Rational triangular_moment_closed_form(int n) {
    if (n < 0) {
        throw InvalidArgument("triangular_moment_closed_form: negative index");
    }
    if (n == 0) {
        return Rational(1);
    }
    return Rational(ipow(BigInt(n), n), factorial(n + 1));
}

std::vector<std::pair<int, Rational>> profile_refinement_sequence(
    const StarWord& w, OperatorSpec::Kind kind, const std::vector<int>& rs,
    int max_ground) {
    if (kind != OperatorSpec::Kind::Triangular && kind != OperatorSpec::Kind::Circular) {
        throw InvalidArgument(
            "profile_refinement_sequence: only the triangular and circular "
            "indicators have grid refinements");
    }
    std::vector<std::pair<int, Rational>> out;
    out.reserve(rs.size());
    for (int r : rs) {
        const VarianceProfile grid = kind == OperatorSpec::Kind::Triangular
                                         ? VarianceProfile::triangular_grid(r)
                                         : VarianceProfile::circular_grid(r);
        out.emplace_back(r, eta_moment(w, OperatorSpec::with_profile(grid), max_ground).value);
    }
    return out;
}

}  // namespace ncmoments
