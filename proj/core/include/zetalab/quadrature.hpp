#pragma once

// Composite Simpson on uniform grids with pairwise (cascade) summation.
// The reduction shape is fixed, so results are bit-identical regardless of
// how the integrand array was filled.

#include <cstddef>
#include <span>

namespace zetalab::quadrature {

// Fixed-shape pairwise sum.
long double pairwise_sum(std::span<const long double> v);

// Composite Simpson over points values[0..n-1] spaced h apart (n >= 3).
// An odd interval count is finished with a 3/8 panel.
double simpson(std::span<const double> values, double h);

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;  // |I_h - I_{2h}|
};

// Simpson plus a step-doubling error estimate (the 2h rule reuses every
// other point over the largest aligned prefix).
Result simpson_with_error(std::span<const double> values, double h);

}  // namespace zetalab::quadrature
