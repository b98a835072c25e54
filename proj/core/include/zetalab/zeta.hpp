#pragma once

// Critical-line evaluation of the Riemann zeta function.
//
// Two independent routes:
//   - zeta_half_em: Euler-Maclaurin continuation of the Dirichlet series.
//     Slow, works from t = 0, absolute error <= precision_target.  This is
//     the oracle.
//   - zeta_half_rs: Riemann-Siegel main sum of length floor(sqrt(t/2pi))
//     plus correction terms C_0..C_8 (frozen Chebyshev tables).  Fast path
//     for t >= 10; agrees with the oracle to better than 1e-6 throughout
//     the oracle regime.

#include <complex>

namespace zetalab {

inline constexpr double kEmMaxT = 1.0e4;  // oracle regime

// zeta(1/2 + it) with absolute error <= precision_target (>= 1e-12).
// Requires 0 <= t <= kEmMaxT.
std::complex<double> zeta_half_em(double t, double precision_target = 1.0e-12);

// Riemann-Siegel theta function (asymptotic series, t >= 1).
long double rs_theta(long double t);

// Hardy Z(t) via the Riemann-Siegel formula; requires t >= 10.
double rs_z(double t);

// |zeta(1/2 + it)| via the fast path; requires t >= 10.
double zeta_half_rs(double t);

}  // namespace zetalab
