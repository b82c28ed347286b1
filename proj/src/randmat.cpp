#include "ncmoments/randmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

#include "ncmoments/moments.hpp"

namespace ncmoments {

namespace {

/// splitmix64 finalizer; decorrelates the per-(trial, label) substreams.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::int64_t trial, int label) {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ (static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL));
    s = mix64(s ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(label)) *
                   0xd1b54a32d192ed03ULL));
    return s;
}

/// Standard normal variates from an explicitly coded Box-Muller transform.
/// std::normal_distribution's output sequence is implementation-defined;
/// spelling the transform out keeps streams identical across toolchains.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the logarithm is finite; u2 in [0, 1).
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

int worker_count() {
    const char* env = std::getenv(kWorkersEnvVar);
    if (env == nullptr) {
        return 1;
    }
    const int workers = std::atoi(env);
    return workers < 1 ? 1 : workers;
}

}  // namespace

std::vector<int> profile_block_sizes(const VarianceProfile& profile, int n) {
    const int r = profile.r;
    std::vector<int> sizes(static_cast<size_t>(r));
    std::vector<Rational> fractions(static_cast<size_t>(r));
    int assigned = 0;
    for (int p = 0; p < r; ++p) {
        const Rational target = profile.width(p) * Rational(n);
        const BigInt base = target.num() / target.den();  // floor: targets are >= 0
        sizes[static_cast<size_t>(p)] = static_cast<int>(base);
        fractions[static_cast<size_t>(p)] = target - Rational(base);
        assigned += sizes[static_cast<size_t>(p)];
    }
    // Hand the leftover rows to the cells with the largest fractional part,
    // lower index first on ties.
    std::vector<int> order(static_cast<size_t>(r));
    for (int p = 0; p < r; ++p) order[static_cast<size_t>(p)] = p;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return fractions[static_cast<size_t>(a)] > fractions[static_cast<size_t>(b)];
    });
    for (int i = 0; i < n - assigned; ++i) {
        ++sizes[static_cast<size_t>(order[static_cast<size_t>(i)])];
    }
    return sizes;
}

Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, int label, std::uint64_t seed,
                               std::int64_t trial) {
    const int n = spec.n;
    if (n < 1) {
        throw InvalidArgument("sample_matrix: matrix size must be positive");
    }
    if (spec.kind == EnsembleSpec::Kind::BlockProfile && !spec.profile.has_value()) {
        throw InvalidArgument("sample_matrix: BlockProfile spec without a profile");
    }
    GaussianStream gauss(substream_seed(seed, trial, label));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);

    // cell_of[i] = block row/column of index i under the profile grid.
    std::vector<int> cell_of;
    std::vector<double> cell_value;
    if (spec.kind == EnsembleSpec::Kind::BlockProfile) {
        const VarianceProfile& profile = *spec.profile;
        const std::vector<int> sizes = profile_block_sizes(profile, n);
        cell_of.reserve(static_cast<size_t>(n));
        for (int p = 0; p < profile.r; ++p) {
            cell_of.insert(cell_of.end(), static_cast<size_t>(sizes[static_cast<size_t>(p)]), p);
        }
        cell_value.resize(static_cast<size_t>(profile.r) * static_cast<size_t>(profile.r));
        for (int p = 0; p < profile.r; ++p) {
            for (int q = 0; q < profile.r; ++q) {
                cell_value[static_cast<size_t>(p * profile.r + q)] =
                    profile.value(p, q).to_double();
            }
        }
    }

    // Row-major fill; an entry with variance v gets independent real and
    // imaginary parts of variance v/(2n) each.  Zero-variance entries stay
    // zero and consume no randomness, so e.g. the strictly upper ensemble's
    // stream does not depend on n through the skipped positions.
    const double half = 1.0 / (2.0 * static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            switch (spec.kind) {
                case EnsembleSpec::Kind::IIDSquare:
                    v = 1.0;
                    break;
                case EnsembleSpec::Kind::StrictUpper:
                    v = i < j ? 1.0 : 0.0;
                    break;
                case EnsembleSpec::Kind::BlockProfile:
                    v = cell_value[static_cast<size_t>(
                        cell_of[static_cast<size_t>(i)] * spec.profile->r +
                        cell_of[static_cast<size_t>(j)])];
                    break;
            }
            if (v > 0.0) {
                const double scale = std::sqrt(v * half);
                const double re = scale * gauss.next();
                const double im = scale * gauss.next();
                out(i, j) = std::complex<double>(re, im);
            }
        }
    }
    return out;
}

namespace {

/// Normalized trace of the matrix product named by the word for one trial.
std::complex<double> trial_trace(const StarWord& w, const EnsembleSpec& spec,
                                 std::uint64_t seed, std::int64_t trial) {
    if (w.empty()) {
        return {1.0, 0.0};
    }
    // Adjoint products have conjugate traces, so the word and its
    // reversed-and-star-flipped partner carry the same real part.  Evaluate
    // whichever of the two orientations is lexicographically smaller: both
    // words then run the identical computation and the agreement is exact,
    // not merely up to rounding.
    const StarWord flipped = w.reversed_flipped();
    const StarWord& oriented = flipped < w ? flipped : w;

    std::vector<Eigen::MatrixXcd> matrices;
    std::vector<int> labels = oriented.distinct_labels();
    matrices.reserve(labels.size());
    for (int label : labels) {
        matrices.push_back(sample_matrix(spec, label, seed, trial));
    }
    auto factor = [&](int pos) -> Eigen::MatrixXcd {
        const StarLetter& letter = oriented.letter(pos);
        const size_t idx = static_cast<size_t>(
            std::lower_bound(labels.begin(), labels.end(), letter.label) - labels.begin());
        if (letter.starred) {
            return matrices[idx].adjoint();
        }
        return matrices[idx];
    };
    Eigen::MatrixXcd product = factor(1);
    for (int pos = 2; pos <= oriented.size(); ++pos) {
        product = (product * factor(pos)).eval();
    }
    const std::complex<double> trace = product.trace() / static_cast<double>(spec.n);
    // Flip back: the computed trace is that of the adjoint when the flipped
    // orientation was evaluated.
    return &oriented == &flipped ? std::conj(trace) : trace;
}

}  // namespace

MomentEstimate estimate_moment(const StarWord& w, const EnsembleSpec& spec,
                               std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidArgument("estimate_moment: need at least one trial");
    }
    std::vector<std::complex<double>> values(static_cast<size_t>(trials));
    const int workers = std::min<std::int64_t>(worker_count(), trials);
    if (workers <= 1) {
        for (std::int64_t t = 0; t < trials; ++t) {
            values[static_cast<size_t>(t)] = trial_trace(w, spec, seed, t);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int id = 0; id < workers; ++id) {
            pool.emplace_back([&, id]() {
                for (std::int64_t t = id; t < trials; t += workers) {
                    values[static_cast<size_t>(t)] = trial_trace(w, spec, seed, t);
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    // Sequential reduction in trial order keeps the result independent of
    // the worker count.
    double mean = 0.0;
    double imag_mean = 0.0;
    for (const auto& v : values) {
        mean += v.real();
        imag_mean += v.imag();
    }
    mean /= static_cast<double>(trials);
    imag_mean /= static_cast<double>(trials);
    double varsum = 0.0;
    for (const auto& v : values) {
        const double d = v.real() - mean;
        varsum += d * d;
    }
    MomentEstimate out;
    out.mean = mean;
    out.imag_mean = imag_mean;
    out.stderr_est = trials > 1 ? std::sqrt(varsum / static_cast<double>(trials - 1) /
                                            static_cast<double>(trials))
                                : 0.0;
    out.trials = trials;
    out.n = spec.n;
    out.seed = seed;
    out.word = w;
    return out;
}

std::vector<ConvergenceRow> convergence_report(const StarWord& w,
                                               const std::vector<EnsembleSpec>& family,
                                               std::int64_t trials, std::uint64_t seed) {
    std::vector<ConvergenceRow> out;
    out.reserve(family.size());
    for (const EnsembleSpec& spec : family) {
        OperatorSpec limit;
        int r = 0;
        switch (spec.kind) {
            case EnsembleSpec::Kind::IIDSquare:
                limit = OperatorSpec::circular();
                break;
            case EnsembleSpec::Kind::StrictUpper:
                limit = OperatorSpec::triangular();
                break;
            case EnsembleSpec::Kind::BlockProfile:
                if (!spec.profile.has_value()) {
                    throw InvalidArgument("convergence_report: BlockProfile without profile");
                }
                limit = OperatorSpec::with_profile(*spec.profile);
                r = spec.profile->r;
                break;
        }
        const MomentEstimate estimate = estimate_moment(w, spec, trials, seed);
        ConvergenceRow row;
        row.n = spec.n;
        row.r = r;
        row.trials = trials;
        row.seed = seed;
        row.estimate = estimate.mean;
        row.stderr_est = estimate.stderr_est;
        row.exact = eta_moment(w, limit).value;
        row.abs_gap = std::abs(estimate.mean - row.exact.to_double());
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace ncmoments
