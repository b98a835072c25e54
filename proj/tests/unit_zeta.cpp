#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetalab/zeta.hpp"

#include <cmath>
#include <complex>

using namespace zetalab;

TEST_CASE("zeta(1/2) reference value") {
    CHECK(zeta_half_em(0.0).real() == doctest::Approx(-1.4603545088095868).epsilon(1e-12));
    CHECK(zeta_half_em(0.0).imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("first nontrivial zero") {
    // t_1 = 14.134725141734693...
    CHECK(std::abs(zeta_half_em(14.1347251417346937)) < 1e-10);
    CHECK(zeta_half_rs(14.134725) < 1e-3);
}

TEST_CASE("Riemann-Siegel agrees with the oracle") {
    double worst = 0;
    for (double t = 10.0; t <= 2000.0; t += 3.7) {
        const double e = std::abs(zeta_half_rs(t) - std::abs(zeta_half_em(t)));
        if (e > worst) worst = e;
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("Z(t) is real and carries |zeta|") {
    for (double t : {15.0, 50.0, 123.456, 777.0, 5000.0}) {
        // e^{i theta(t)} zeta(1/2+it) should be (nearly) real with modulus |zeta|
        const auto z = zeta_half_em(t);
        const long double th = rs_theta(static_cast<long double>(t));
        const auto rot = std::complex<double>(static_cast<double>(std::cos(th)),
                                              static_cast<double>(std::sin(th)));
        const auto Z = rot * z;
        CHECK(std::abs(Z.imag()) < 1e-8);
        CHECK(std::abs(Z.real()) == doctest::Approx(std::abs(z)).epsilon(1e-9));
        // and the fast path reproduces the same real value including sign
        CHECK(std::abs(rs_z(t) - Z.real()) < 1e-5);
    }
}

TEST_CASE("theta reference value") {
    CHECK(static_cast<double>(rs_theta(100.0L)) ==
          doctest::Approx(87.97216523178722).epsilon(1e-12));
}

TEST_CASE("domain validation") {
    CHECK_THROWS(zeta_half_em(-1.0));
    CHECK_THROWS(zeta_half_em(2.0e4));          // beyond the oracle regime
    CHECK_THROWS(zeta_half_em(50.0, 1.0e-15));  // precision target too strict
    CHECK_THROWS(rs_z(5.0));                    // fast path needs t >= 10
}
