#pragma once

// Mixed moment integrals  I_{k,m}(T) = int Delta^k(t) |zeta(1/2+it)|^{2m} dt
// over [2, T], growth-exponent fits, and comparison against the derived
// upper bounds.

#include "zetalab/bounds.hpp"
#include "zetalab/divisor.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/quadrature.hpp"

#include <span>
#include <string>
#include <vector>

namespace zetalab {

struct MomentRequest {
    int k = 0;                // power of Delta (signed integrand when odd)
    int m = 0;                // power of |zeta|^2
    std::vector<double> T;    // evaluation endpoints, ascending
};

// One moment integral over [grid.t0, T] by composite Simpson.  Delta values
// come from the supplied source; |zeta|^2 values from the grid.  k = m = 0
// integrates the unit function (a quadrature sanity check).
quadrature::Result mixed_moment(const SampleGrid& grid, double T, int k, int m,
                                const DeltaSource& delta_source);

struct MomentPoint {
    double T = 0.0;
    double I = 0.0;
    double err_est = 0.0;
    std::string slope_context;  // "fit", "fit-aux", or "excluded"
};

// The T values actually evaluated for a fit: the requested points, plus
// geometric midpoints inserted into the largest decade [maxT/10, maxT]
// until it holds at least three points.  Result is ascending and deduplicated.
std::vector<double> augment_largest_decade(std::vector<double> T);

// Evaluate I_{k,m} at every point of augment_largest_decade(request.T),
// tagging each with its role in the fit.
std::vector<MomentPoint> moment_series(const SampleGrid& grid, const MomentRequest& request,
                                       const DeltaSource& delta_source);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;      // fit of ln|I| = slope * ln T + intercept
    std::size_t points_used = 0;
};

// Least-squares slope of ln|I| against ln T.  Needs at least three points;
// use_abs permits sign changes (odd k) by fitting |I|.  Points with
// non-positive |I| are rejected.
FitResult fit_growth_exponent(std::span<const double> T, std::span<const double> I, bool use_abs);

// Fit over the points tagged "fit" or "fit-aux".
FitResult fit_series(const std::vector<MomentPoint>& points, bool use_abs);

struct MomentReport {
    int k = 0;
    int m = 0;
    std::vector<MomentPoint> points;
    FitResult fit;
    double derived_exponent = 0.0;      // from derive_mixed_bound
    double trivial_exponent = 0.0;
    double conjectural = 0.0;           // 1 + k/4
    std::string derived_label;
};

MomentReport compare_with_bounds(const SampleGrid& grid, const MomentRequest& request,
                                 const DeltaSource& delta_source, const FactDatabase& db);

// CSV with header "T,k,m,I,err_est,slope_context"; T printed exactly,
// I and err_est with 17 significant digits.
std::string report_to_csv(const MomentReport& r);
std::string report_to_json(const MomentReport& r);

}  // namespace zetalab
