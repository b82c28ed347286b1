#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "ncmoments/moments.hpp"
#include "ncmoments/randmat.hpp"

using namespace ncmoments;

namespace {

VarianceProfile ones_profile(int r, std::vector<Rational> widths) {
    std::vector<std::vector<Rational>> values(
        static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(r), Rational(1)));
    return VarianceProfile(r, std::move(values), std::move(widths));
}

}  // namespace

TEST_CASE("block sizes follow largest-remainder rounding") {
    CHECK(profile_block_sizes(VarianceProfile::triangular_grid(2), 5) ==
          std::vector<int>{3, 2});
    CHECK(profile_block_sizes(VarianceProfile::triangular_grid(2), 4) ==
          std::vector<int>{2, 2});
    CHECK(profile_block_sizes(ones_profile(3, {Rational(1, 2), Rational(1, 3), Rational(1, 6)}),
                              7) == std::vector<int>{4, 2, 1});
    CHECK(profile_block_sizes(ones_profile(2, {Rational(1, 3), Rational(2, 3)}), 4) ==
          std::vector<int>{1, 3});
    // Ties hand the leftover row to the lower index.
    CHECK(profile_block_sizes(VarianceProfile::triangular_grid(2), 1) ==
          std::vector<int>{1, 0});
    CHECK(profile_block_sizes(VarianceProfile::triangular_grid(4), 6) ==
          std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("sampled matrices have the advertised sparsity") {
    const auto strict = sample_matrix(EnsembleSpec::strict_upper(6), 1, 7, 0);
    REQUIRE(strict.rows() == 6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j <= i; ++j) {
            CHECK(strict(i, j) == std::complex<double>(0.0, 0.0));
        }
        for (int j = i + 1; j < 6; ++j) {
            CHECK(strict(i, j) != std::complex<double>(0.0, 0.0));
        }
    }

    // Upper-right block only for the 2x2 triangular grid at n = 4.
    const auto block = sample_matrix(
        EnsembleSpec::block_profile(4, VarianceProfile::triangular_grid(2)), 1, 7, 0);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool live = i < 2 && j >= 2;
            CHECK((block(i, j) != std::complex<double>(0.0, 0.0)) == live);
        }
    }
    CHECK_THROWS_AS(sample_matrix(EnsembleSpec::iid_square(0), 1, 7, 0), InvalidArgument);
    CHECK_THROWS_AS(
        sample_matrix(EnsembleSpec{EnsembleSpec::Kind::BlockProfile, 4, std::nullopt}, 1, 7, 0),
        InvalidArgument);
}

TEST_CASE("sampling is a pure function of seed, trial and label") {
    const EnsembleSpec spec = EnsembleSpec::iid_square(5);
    CHECK(sample_matrix(spec, 1, 42, 3) == sample_matrix(spec, 1, 42, 3));
    CHECK(sample_matrix(spec, 1, 42, 3) != sample_matrix(spec, 2, 42, 3));
    CHECK(sample_matrix(spec, 1, 42, 3) != sample_matrix(spec, 1, 43, 3));
    CHECK(sample_matrix(spec, 1, 42, 3) != sample_matrix(spec, 1, 42, 4));
}

TEST_CASE("zero-variance entries consume no randomness") {
    // Both kinds use the same substream; the strictly upper sampler skips its
    // dead entries without drawing, so its first live entry (0,1) sees the
    // very first pair of variates — the same pair the dense sampler spends on
    // (0,0).  The per-entry scale is also equal, so the values match exactly.
    const auto dense = sample_matrix(EnsembleSpec::iid_square(3), 1, 99, 5);
    const auto sparse = sample_matrix(EnsembleSpec::strict_upper(3), 1, 99, 5);
    CHECK(sparse(0, 1) == dense(0, 0));
    CHECK(sparse(0, 2) == dense(0, 1));
    CHECK(sparse(1, 2) == dense(0, 2));
}

TEST_CASE("estimates are deterministic and echo their parameters") {
    const StarWord w = StarWord::tt_power(2);
    const EnsembleSpec spec = EnsembleSpec::strict_upper(12);
    const MomentEstimate a = estimate_moment(w, spec, 50, 4242);
    const MomentEstimate b = estimate_moment(w, spec, 50, 4242);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_est == b.stderr_est);
    CHECK(a.imag_mean == b.imag_mean);
    CHECK(a.trials == 50);
    CHECK(a.n == 12);
    CHECK(a.seed == 4242);
    CHECK(a.word == w);
    CHECK(a.stderr_est > 0.0);
    // A different seed moves the estimate.
    CHECK(estimate_moment(w, spec, 50, 4243).mean != a.mean);
    CHECK_THROWS_AS(estimate_moment(w, spec, 0, 1), InvalidArgument);
}

TEST_CASE("worker count never changes the result") {
    const StarWord w = StarWord::parse("*1,1,*2,2,*1,1");
    const EnsembleSpec spec = EnsembleSpec::iid_square(9);
    const MomentEstimate serial = estimate_moment(w, spec, 37, 7);
    REQUIRE(setenv(kWorkersEnvVar, "3", 1) == 0);
    const MomentEstimate threaded = estimate_moment(w, spec, 37, 7);
    REQUIRE(setenv(kWorkersEnvVar, "16", 1) == 0);
    const MomentEstimate oversubscribed = estimate_moment(w, spec, 37, 7);
    REQUIRE(unsetenv(kWorkersEnvVar) == 0);
    CHECK(serial.mean == threaded.mean);
    CHECK(serial.stderr_est == threaded.stderr_est);
    CHECK(serial.imag_mean == threaded.imag_mean);
    CHECK(serial.mean == oversubscribed.mean);
    CHECK(serial.stderr_est == oversubscribed.stderr_est);
}

TEST_CASE("adjoint words give identical real estimates") {
    // The estimator evaluates a canonical orientation of each word, so the
    // agreement is exact, not statistical; imaginary parts are conjugate.
    const EnsembleSpec spec = EnsembleSpec::iid_square(8);
    for (const char* text : {"1,1,*1", "*1,1,1", "*1,*2,2,1,1,2", "2,*1,2"}) {
        const StarWord w = StarWord::parse(text);
        const StarWord adj = w.reversed_flipped();
        REQUIRE(adj != w);
        const MomentEstimate direct = estimate_moment(w, spec, 25, 11);
        const MomentEstimate flipped = estimate_moment(adj, spec, 25, 11);
        CHECK(direct.mean == flipped.mean);
        CHECK(direct.stderr_est == flipped.stderr_est);
        CHECK(direct.imag_mean == -flipped.imag_mean);
    }
}

TEST_CASE("strictly upper samples are nilpotent") {
    const EnsembleSpec spec = EnsembleSpec::strict_upper(6);
    for (int power : {6, 7}) {
        std::vector<StarLetter> letters(static_cast<size_t>(power), StarLetter{false, 1});
        const MomentEstimate est = estimate_moment(StarWord(std::move(letters)), spec, 8, 3);
        CHECK(est.mean == 0.0);
        CHECK(est.stderr_est == 0.0);
        CHECK(est.imag_mean == 0.0);
    }
}

TEST_CASE("the empty word estimates the trace of the identity") {
    const MomentEstimate est = estimate_moment(StarWord(), EnsembleSpec::iid_square(4), 6, 1);
    CHECK(est.mean == 1.0);
    CHECK(est.stderr_est == 0.0);
    CHECK(est.imag_mean == 0.0);
}

TEST_CASE("finite-size mean of the second moment is (n-1)/(2n)") {
    // E[|entry|^2] = 1/n above the diagonal, so E[Re tr(T*T)/n] is exactly
    // binomial(n,2)/n^2 at every n; check the estimator against it well
    // within its own error bars.
    const int n = 10;
    const MomentEstimate est =
        estimate_moment(StarWord::tt_power(1), EnsembleSpec::strict_upper(n), 4000, 2024);
    const double expected = static_cast<double>(n - 1) / (2.0 * n);
    CHECK(std::abs(est.mean - expected) <= 4.0 * est.stderr_est);
}

TEST_CASE("convergence rows pair estimates with exact limits") {
    const StarWord w = StarWord::tt_power(1);
    const std::vector<EnsembleSpec> family = {
        EnsembleSpec::iid_square(24),
        EnsembleSpec::strict_upper(24),
        EnsembleSpec::block_profile(24, VarianceProfile::triangular_grid(2)),
    };
    const auto rows = convergence_report(w, family, 30, 5);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].exact == Rational(1));
    CHECK(rows[1].exact == Rational(1, 2));
    CHECK(rows[2].exact == Rational(1, 4));
    CHECK(rows[0].r == 0);
    CHECK(rows[1].r == 0);
    CHECK(rows[2].r == 2);
    for (const auto& row : rows) {
        CHECK(row.n == 24);
        CHECK(row.trials == 30);
        CHECK(row.seed == 5);
        CHECK(row.abs_gap ==
              doctest::Approx(std::abs(row.estimate - row.exact.to_double())).epsilon(1e-12));
        // The estimate matches a direct run with the same parameters.
        EnsembleSpec spec = family[static_cast<size_t>(&row - rows.data())];
        CHECK(row.estimate == estimate_moment(w, spec, 30, 5).mean);
    }
}
