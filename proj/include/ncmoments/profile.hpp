#pragma once

#include <vector>

#include "ncmoments/rational.hpp"

namespace ncmoments {

/// A piecewise-constant variance function on the unit square: the square is
/// split into an r x r grid of cells, cell (p, q) carrying the non-negative
/// value values[p][q] (0-based row p = first coordinate).  Column widths
/// (and row heights — the grid is shared) are given by `widths`, which must
/// be positive and sum to 1.  The uniform split is the common case.
struct VarianceProfile {
    int r = 1;
    std::vector<Rational> widths;
    std::vector<std::vector<Rational>> values;

    VarianceProfile(int r_in, std::vector<std::vector<Rational>> values_in,
                    std::vector<Rational> widths_in = {});

    /// Indicator of the strict upper triangle on an r x r uniform grid:
    /// cell (p, q) is 1 when p < q, else 0.  Refines the triangle indicator.
    static VarianceProfile triangular_grid(int r);

    /// Constant 1 on an r x r uniform grid; refines the constant profile.
    static VarianceProfile circular_grid(int r);

    const Rational& value(int p, int q) const { return values[static_cast<size_t>(p)][static_cast<size_t>(q)]; }
    const Rational& width(int p) const { return widths[static_cast<size_t>(p)]; }
};

}  // namespace ncmoments
