#pragma once

// Uniform sample grids of |zeta(1/2 + it)|^2 on the critical line, with
// binary caching and the mean-square remainder E(T).

#include <cstdint>
#include <string>
#include <vector>

namespace zetalab {

struct SampleGrid {
    double t0 = 0.0;
    double t1 = 0.0;
    double h = 0.0;
    std::vector<double> values;  // |zeta(1/2 + i(t0 + j*h))|^2

    std::size_t size() const { return values.size(); }
    double t_at(std::size_t j) const { return t0 + static_cast<double>(j) * h; }
};

// Sample |zeta|^2 on [t0, t1] with step h.  Requires 2 <= t0 < t1 and
// 0 < h <= 0.05.  Uses the Riemann-Siegel path for t >= 10 and the
// Euler-Maclaurin route below that.  Deterministic for any thread count.
SampleGrid sample_critical_line(double t0, double t1, double h, int threads = 0);

// Binary cache round-trip ("ZETGRD01").
void save_grid(const SampleGrid& g, const std::string& path);
SampleGrid load_grid(const std::string& path);

struct EResult {
    double value = 0.0;           // E(T)
    double error_estimate = 0.0;  // quadrature step-doubling estimate
};

// E(T) = int_0^T |zeta(1/2+it)|^2 dt - T(log(T/2pi) + 2*gamma - 1).
// The grid must start at t0 = 2 and cover T; the [0,2] head segment is
// integrated separately with the Euler-Maclaurin route at step 0.01.
EResult mean_square_error_E(double T, const SampleGrid& grid);

}  // namespace zetalab
