#include "ncmoments/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "ncmoments/profile.hpp"
#include "ncmoments/volumes.hpp"

namespace ncmoments {
namespace oracles {

namespace {

void extend_matchings(std::vector<int>& free_points,
                      std::vector<std::pair<int, int>>& current,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free_points.empty()) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    const int first = free_points.front();
    for (size_t i = 1; i < free_points.size(); ++i) {
        const int partner = free_points[i];
        std::vector<int> rest;
        rest.reserve(free_points.size() - 2);
        for (size_t j = 1; j < free_points.size(); ++j) {
            if (j != i) rest.push_back(free_points[j]);
        }
        current.emplace_back(first, partner);
        extend_matchings(rest, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int m) {
    if (m < 0 || m % 2 != 0) {
        throw InvalidWordLength("all_perfect_matchings: ground size " + std::to_string(m) +
                                " is not a non-negative even number");
    }
    std::vector<int> points(static_cast<size_t>(m));
    std::iota(points.begin(), points.end(), 1);
    std::vector<std::pair<int, int>> current;
    std::vector<std::vector<std::pair<int, int>>> out;
    extend_matchings(points, current, out);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings_by_filter(int m) {
    auto matchings = all_perfect_matchings(m);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (auto& matching : matchings) {
        bool crossing = false;
        for (size_t i = 0; i < matching.size() && !crossing; ++i) {
            for (size_t j = i + 1; j < matching.size() && !crossing; ++j) {
                const auto& [a, b] = matching[i];
                const auto& [c, d] = matching[j];
                // Blocks sorted by left leg, so a < c; they cross exactly
                // when c falls inside (a, b) and d outside.
                crossing = a < c && c < b && b < d;
            }
        }
        if (!crossing) {
            out.push_back(std::move(matching));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt linear_extensions_by_permutations(const ColorPoset& poset) {
    const int g = poset.ground;
    if (g > 10) {
        throw LimitExceeded("linear_extensions_by_permutations: ground size " +
                            std::to_string(g) + " means " + std::to_string(g) +
                            "! permutations; refusing above 10");
    }
    std::vector<int> rank(static_cast<size_t>(g));
    std::iota(rank.begin(), rank.end(), 0);
    BigInt count = 0;
    do {
        // rank[v] = position of element v in the candidate total order.
        bool ok = true;
        for (const auto& [a, b] : poset.less) {
            if (rank[static_cast<size_t>(a)] >= rank[static_cast<size_t>(b)]) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return count;
}

Rational profile_weight_by_colorings(const PairPartition& p, const StarWord& w,
                                     const VarianceProfile& profile) {
    if (!is_adapted(p, w, AdaptednessMode::EtaMode)) {
        throw NotAdapted("profile_weight_by_colorings: pairing not adapted");
    }
    const int s = p.size();
    const int r = profile.r;
    // color[k] for k = 0..s, element 0 being the imaginary block; odometer
    // enumeration of all r^(s+1) colorings.
    std::vector<int> color(static_cast<size_t>(s) + 1, 0);
    Rational total;
    while (true) {
        Rational term(1);
        for (int k = 0; k <= s; ++k) {
            term *= profile.width(color[static_cast<size_t>(k)]);
        }
        for (int k = 1; k <= s && !term.is_zero(); ++k) {
            const int own = color[static_cast<size_t>(k)];
            const int out = color[static_cast<size_t>(p.nearest_outer(k))];
            term *= w.letter(p.block(k).first).starred ? profile.value(own, out)
                                                       : profile.value(out, own);
        }
        total += term;
        int pos = 0;
        while (pos <= s && ++color[static_cast<size_t>(pos)] == r) {
            color[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos > s) break;
    }
    return total;
}

}  // namespace oracles
}  // namespace ncmoments
