#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncmoments/profile.hpp"
#include "ncmoments/rational.hpp"
#include "ncmoments/word.hpp"

namespace ncmoments {

/// A Gaussian random-matrix ensemble at one matrix size n.  Entries are
/// independent complex Gaussians (real and imaginary parts independent,
/// each of variance v/(2n) for cell variance v), so an entry has total
/// variance v/n and the moments of the kind's limit family are recovered
/// as n grows.
///
///  - IIDSquare: every entry has variance 1/n (circular limit).
///  - StrictUpper: entries above the diagonal have variance 1/n, the rest
///    are zero (triangular limit).
///  - BlockProfile: the matrix is split into r x r blocks whose row/column
///    counts follow the profile widths (largest-remainder rounding, ties to
///    the lower index); block (p, q) has entry variance values[p][q]/n.
struct EnsembleSpec {
    enum class Kind { IIDSquare, StrictUpper, BlockProfile };

    Kind kind = Kind::IIDSquare;
    int n = 1;
    std::optional<VarianceProfile> profile;

    static EnsembleSpec iid_square(int n) { return {Kind::IIDSquare, n, std::nullopt}; }
    static EnsembleSpec strict_upper(int n) { return {Kind::StrictUpper, n, std::nullopt}; }
    static EnsembleSpec block_profile(int n, VarianceProfile p) {
        return {Kind::BlockProfile, n, std::move(p)};
    }
};

/// Monte Carlo estimate of a *-moment, with the sampling parameters echoed
/// back.  `imag_mean` is a diagnostic: the averaged imaginary part of the
/// normalized traces, which should be statistical noise around zero.
struct MomentEstimate {
    double mean = 0.0;
    double stderr_est = 0.0;
    double imag_mean = 0.0;
    std::int64_t trials = 0;
    int n = 0;
    std::uint64_t seed = 0;
    StarWord word;
};

/// Row/column boundaries of the block grid for a profile at size n:
/// r block sizes summing to n, by largest-remainder rounding of width*n
/// (ties broken toward the lower index).
std::vector<int> profile_block_sizes(const VarianceProfile& profile, int n);

/// One sample of the ensemble for the given label.  The draw depends only on
/// (seed, trial, label) — not on the word or on evaluation order — so every
/// occurrence of a label within a trial sees the same matrix and different
/// labels see independent ones.  Entries are filled row-major from a
/// dedicated substream; zero-variance entries consume no randomness.
Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, int label, std::uint64_t seed,
                               std::int64_t trial);

/// Monte Carlo estimate of the *-moment of w: the average over trials of
/// Re(tr(product)/n), with the standard error of that average.
///
/// The word and its reversed-and-star-flipped partner name adjoint products,
/// whose normalized traces have equal real parts; the evaluator computes the
/// lexicographically smaller of the two orientations, so the two estimates
/// agree bit for bit on the same seed.  Trials may be spread over worker
/// threads (NCMOMENTS_WORKERS, default 1); per-trial values land in a vector
/// indexed by trial and the reduction is sequential, so the worker count
/// never changes the result.
MomentEstimate estimate_moment(const StarWord& w, const EnsembleSpec& spec,
                               std::int64_t trials, std::uint64_t seed);

/// One line of a convergence report: the estimate at one matrix size against
/// the exact moment of the matching limit family (circular for IIDSquare,
/// triangular for StrictUpper, the profile family for BlockProfile).
/// `r` is the profile grid size, 0 for the kinds without one.
struct ConvergenceRow {
    int n = 0;
    int r = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double stderr_est = 0.0;
    Rational exact;
    double abs_gap = 0.0;
};

/// Runs estimate_moment for each ensemble in the family and pairs every
/// estimate with the exact prediction.
std::vector<ConvergenceRow> convergence_report(const StarWord& w,
                                               const std::vector<EnsembleSpec>& family,
                                               std::int64_t trials, std::uint64_t seed);

/// Environment variable read by estimate_moment for the worker-thread count.
inline constexpr const char* kWorkersEnvVar = "NCMOMENTS_WORKERS";

}  // namespace ncmoments
