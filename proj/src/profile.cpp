#include "ncmoments/profile.hpp"

namespace ncmoments {

VarianceProfile::VarianceProfile(int r_in, std::vector<std::vector<Rational>> values_in,
                                 std::vector<Rational> widths_in)
    : r(r_in), widths(std::move(widths_in)), values(std::move(values_in)) {
    if (r < 1) {
        throw InvalidArgument("VarianceProfile: grid size must be positive");
    }
    if (widths.empty()) {
        widths.assign(static_cast<size_t>(r), Rational(BigInt(1), BigInt(r)));
    }
    if (static_cast<int>(widths.size()) != r) {
        throw LengthMismatch("VarianceProfile: " + std::to_string(widths.size()) +
                             " widths for grid size " + std::to_string(r));
    }
    Rational total;
    for (const Rational& w : widths) {
        if (!(w > Rational(0))) {
            throw InvalidArgument("VarianceProfile: widths must be positive");
        }
        total += w;
    }
    if (total != Rational(1)) {
        throw InvalidArgument("VarianceProfile: widths sum to " + total.to_string() +
                              ", expected 1");
    }
    if (static_cast<int>(values.size()) != r) {
        throw LengthMismatch("VarianceProfile: " + std::to_string(values.size()) +
                             " value rows for grid size " + std::to_string(r));
    }
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != r) {
            throw LengthMismatch("VarianceProfile: ragged value matrix");
        }
        for (const Rational& v : row) {
            if (v < Rational(0)) {
                throw InvalidArgument("VarianceProfile: negative variance value");
            }
        }
    }
}

VarianceProfile VarianceProfile::triangular_grid(int r) {
    std::vector<std::vector<Rational>> values(
        static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(r), Rational(0)));
    for (int p = 0; p < r; ++p) {
        for (int q = p + 1; q < r; ++q) {
            values[static_cast<size_t>(p)][static_cast<size_t>(q)] = Rational(1);
        }
    }
    return VarianceProfile(r, std::move(values));
}

VarianceProfile VarianceProfile::circular_grid(int r) {
    std::vector<std::vector<Rational>> values(
        static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(r), Rational(1)));
    return VarianceProfile(r, std::move(values));
}

}  // namespace ncmoments
