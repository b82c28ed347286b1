#include "ncmoments/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncmoments {

ColorPoset::ColorPoset(int ground_size, std::vector<std::pair<int, int>> relations)
    : ground(ground_size), less(std::move(relations)) {
    if (ground < 0) {
        throw InvalidArgument("ColorPoset: negative ground size");
    }
    for (const auto& [a, b] : less) {
        if (a < 0 || b < 0 || a >= ground || b >= ground) {
            throw IndexError("ColorPoset: relation (" + std::to_string(a) + "," +
                             std::to_string(b) + ") outside ground set");
        }
        if (a == b) {
            throw InvalidArgument("ColorPoset: reflexive relation on element " +
                                  std::to_string(a));
        }
    }
}

ColorPoset region_constraints(const PairPartition& p, const StarWord& w,
                              AdaptednessMode mode) {
    if (!is_adapted(p, w, mode)) {
        throw NotAdapted("region_constraints: pairing " + p.to_string() +
                         " is not adapted to word '" + w.to_string() + "'");
    }
    std::vector<std::pair<int, int>> less;
    less.reserve(static_cast<size_t>(p.size()));
    for (int k = 1; k <= p.size(); ++k) {
        const int o = p.nearest_outer(k);
        const bool below = mode == AdaptednessMode::CreationMode ||
                           w.letter(p.block(k).first).starred;
        if (below) {
            less.emplace_back(k, o);
        } else {
            less.emplace_back(o, k);
        }
    }
    return ColorPoset(p.size() + 1, std::move(less));
}

BigInt count_linear_extensions(const ColorPoset& poset, int max_ground) {
    // 25! < 2^84, so the 128-bit counters below cannot overflow as long as
    // the limit itself stays below 25.
    constexpr int kHardCap = 25;
    const int g = poset.ground;
    if (g > max_ground || g > kHardCap) {
        throw LimitExceeded("count_linear_extensions: ground size " + std::to_string(g) +
                            " exceeds limit " + std::to_string(std::min(max_ground, kHardCap)));
    }
    if (g == 0) {
        return 1;
    }
    // preds[v] = elements that must be placed before v.
    std::vector<std::uint32_t> preds(static_cast<size_t>(g), 0);
    for (const auto& [a, b] : poset.less) {
        preds[static_cast<size_t>(b)] |= std::uint32_t{1} << a;
    }
    // ways[S] = number of orderings of the elements of S consistent with the
    // constraints, where S ranges over downsets; unreachable masks stay 0.
    const std::uint32_t full = (g == 32) ? ~std::uint32_t{0}
                                         : (std::uint32_t{1} << g) - 1;
    std::vector<unsigned __int128> ways(static_cast<size_t>(full) + 1, 0);
    ways[0] = 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        const unsigned __int128 here = ways[mask];
        if (here == 0) {
            continue;
        }
        for (int v = 0; v < g; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if ((mask & bit) == 0 && (preds[static_cast<size_t>(v)] & ~mask) == 0) {
                ways[mask | bit] += here;
            }
        }
    }
    const unsigned __int128 total = ways[full];
    BigInt out = static_cast<std::uint64_t>(total >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(total);
    return out;
}

Rational volume(const PairPartition& p, const StarWord& w, AdaptednessMode mode) {
    const ColorPoset poset = region_constraints(p, w, mode);
    return Rational(count_linear_extensions(poset), factorial(poset.ground));
}

VolumeEstimate monte_carlo_volume(const ColorPoset& poset, std::int64_t samples,
                                  std::uint64_t seed, bool strict) {
    if (samples < 1) {
        throw InvalidArgument("monte_carlo_volume: need at least one sample");
    }
    std::mt19937_64 eng(seed);
    // Explicit 53-bit conversion so the stream is identical on every
    // platform; values lie in [0, 1).
    auto uniform = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    std::vector<double> x(static_cast<size_t>(poset.ground));
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        for (double& v : x) {
            v = uniform();
        }
        bool ok = true;
        for (const auto& [a, b] : poset.less) {
            const double xa = x[static_cast<size_t>(a)];
            const double xb = x[static_cast<size_t>(b)];
            if (strict ? !(xa < xb) : !(xa <= xb)) {
                ok = false;
                break;
            }
        }
        hits += ok ? 1 : 0;
    }
    VolumeEstimate out;
    out.samples = samples;
    out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    out.stderr_est =
        std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
    return out;
}

}  // namespace ncmoments
