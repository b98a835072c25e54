#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetalab/cache.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

using namespace zetalab;
namespace fs = std::filesystem;

namespace {

// deterministic stand-in for Delta(t) in integrator tests
class FnDeltaSource final : public DeltaSource {
public:
    explicit FnDeltaSource(double (*f)(double)) : f_(f) {}
    double delta_at(double t) const override { return f_(t); }
    double max_t() const override { return 1e18; }

private:
    double (*f_)(double);
};

std::vector<double> sampled(double (*f)(double), double a, double b, double h) {
    const auto n = static_cast<std::size_t>(std::llround((b - a) / h)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(a + static_cast<double>(i) * h);
    return v;
}

}  // namespace

TEST_CASE("simpson is exact on cubics") {
    // int_0^1 (x^3 - 2x + 1) dx = 1/4 - 1 + 1 = 1/4
    auto cubic = [](double x) { return x * x * x - 2.0 * x + 1.0; };
    for (std::size_t n : {5u, 6u, 9u, 100u, 101u}) {  // even and odd interval counts
        const double h = 1.0 / static_cast<double>(n - 1);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = cubic(static_cast<double>(i) * h);
        CHECK(quadrature::simpson(v, h) == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("simpson converges at fourth order on sin") {
    const double exact = 1.0 - std::cos(5.0);
    const auto coarse = sampled(std::sin, 0.0, 5.0, 0.01);
    const auto fine = sampled(std::sin, 0.0, 5.0, 0.005);
    const double e1 = std::abs(quadrature::simpson(coarse, 0.01) - exact);
    const double e2 = std::abs(quadrature::simpson(fine, 0.005) - exact);
    CHECK(e1 < 1e-9);
    CHECK(e2 < e1 / 8.0);  // ~16x in theory; allow slack

    const auto r = quadrature::simpson_with_error(coarse, 0.01);
    CHECK(r.error_estimate >= 0.0);
    CHECK(std::abs(r.value - exact) <= std::max(r.error_estimate, 1e-12));
}

TEST_CASE("pairwise_sum equals serial summation") {
    std::vector<long double> v;
    long double serial = 0.0L;
    for (int i = 1; i <= 1000; ++i) {
        v.push_back(1.0L / i);
        serial += 1.0L / i;
    }
    CHECK(static_cast<double>(quadrature::pairwise_sum(v)) ==
          doctest::Approx(static_cast<double>(serial)).epsilon(1e-17));
}

TEST_CASE("growth-exponent fit on synthetic data") {
    std::vector<double> T = {1e3, 1e4, 31623.0, 1e5};

    std::vector<double> pure;  // I = T^{3/2}
    for (double t : T) pure.push_back(std::pow(t, 1.5));
    CHECK(fit_growth_exponent(T, pure, false).slope == doctest::Approx(1.5).epsilon(1e-12));

    std::vector<double> flat(T.size(), 42.0);
    CHECK(fit_growth_exponent(T, flat, false).slope ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    // with a log factor the apparent slope sits just above 3/2
    std::vector<double> logged, decade_T = {1e4, 31623.0, 1e5};
    for (double t : decade_T) logged.push_back(std::pow(t, 1.5) * std::log(t));
    const double s = fit_growth_exponent(decade_T, logged, false).slope;
    CHECK(s > 1.50);
    CHECK(s < 1.62);

    // negative values require abs mode
    std::vector<double> neg;
    for (double t : T) neg.push_back(-std::pow(t, 1.5));
    CHECK_THROWS(fit_growth_exponent(T, neg, false));
    CHECK(fit_growth_exponent(T, neg, true).slope == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS(fit_growth_exponent(std::vector<double>{1e3, 1e4},
                                     std::vector<double>{1.0, 2.0}, false));
}

TEST_CASE("largest-decade point selection") {
    // two requested points in the top decade: the geometric midpoint is added
    auto a = augment_largest_decade({1e3, 1e4, 1e5});
    REQUIRE(a.size() == 4);
    CHECK(a[2] == 31623.0);

    // three points already there: unchanged
    auto b = augment_largest_decade({20.0, 50.0, 100.0});
    CHECK(b == std::vector<double>{20.0, 50.0, 100.0});

    // a single point: decade start and midpoint get added
    auto c = augment_largest_decade({100.0});
    REQUIRE(c.size() == 3);
    CHECK(c.front() == 10.0);
    CHECK(c.back() == 100.0);
}

TEST_CASE("grid sampling is deterministic across thread counts") {
    const auto a = sample_critical_line(2.0, 40.0, 0.01, 1);
    const auto b = sample_critical_line(2.0, 40.0, 0.01, 5);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) REQUIRE(a.values[i] == b.values[i]);
    CHECK_THROWS(sample_critical_line(1.0, 40.0, 0.01));
    CHECK_THROWS(sample_critical_line(2.0, 40.0, 0.2));
}

TEST_CASE("grid cache round-trip and corruption") {
    const auto g = sample_critical_line(2.0, 20.0, 0.02);
    const auto file = (fs::temp_directory_path() / "zl_grid_test.bin").string();
    save_grid(g, file);
    const auto back = load_grid(file);
    REQUIRE(back.values == g.values);
    CHECK(back.t0 == 2.0);
    CHECK(back.h == 0.02);
    {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(3);
        f.put('!');
    }
    CHECK_THROWS_AS((void)load_grid(file), cache::CacheError);
    fs::remove(file);
}

TEST_CASE("mean-square remainder E(T)") {
    const auto g = sample_critical_line(2.0, 110.0, 0.01);
    const auto e = mean_square_error_E(100.0, g);
    CHECK(e.value == doctest::Approx(3.4627).epsilon(1e-3));
    CHECK(e.error_estimate < 1e-6);
    CHECK_THROWS(mean_square_error_E(200.0, g));
}

TEST_CASE("moment integrals: unit integrand and additivity") {
    const auto g = sample_critical_line(2.0, 100.0, 0.01);
    FnDeltaSource unit(+[](double) { return 1.0; });

    const auto r = mixed_moment(g, 100.0, 0, 0, unit);
    CHECK(r.value == doctest::Approx(98.0).epsilon(1e-12));

    // I(0,1) over [2,100] equals the zeta mean square over the same range
    const auto i01 = mixed_moment(g, 100.0, 0, 1, unit);
    const auto i01a = mixed_moment(g, 60.0, 0, 1, unit);
    const auto tailg = sample_critical_line(60.0, 100.0, 0.01);
    const auto i01b = mixed_moment(tailg, 100.0, 0, 1, unit);
    CHECK(i01.value == doctest::Approx(i01a.value + i01b.value - /* overlap at t0 */ 0.0)
                            .epsilon(1e-6));
}

TEST_CASE("odd powers keep the sign of Delta") {
    const auto g = sample_critical_line(2.0, 50.0, 0.01);
    FnDeltaSource negative(+[](double) { return -2.0; });
    const auto r = mixed_moment(g, 50.0, 1, 0, negative);
    CHECK(r.value == doctest::Approx(-96.0).epsilon(1e-12));  // -2 * (50-2)
    FnDeltaSource ramp(+[](double t) { return t; });
    const auto r3 = mixed_moment(g, 50.0, 3, 0, ramp);  // int_2^50 t^3 dt
    CHECK(r3.value == doctest::Approx((std::pow(50.0, 4) - 16.0) / 4.0).epsilon(1e-9));
}

TEST_CASE("moment series and report plumbing") {
    const auto g = sample_critical_line(2.0, 100.0, 0.01);
    FnDeltaSource unit(+[](double) { return 1.0; });
    FactDatabase db;
    MomentRequest req{0, 1, {20.0, 50.0, 100.0}};
    const auto rep = compare_with_bounds(g, req, unit, db);
    CHECK(rep.points.size() == 3);
    CHECK(rep.fit.points_used == 3);
    CHECK(rep.derived_exponent == 1.0);
    const auto csv = report_to_csv(rep);
    CHECK(csv.rfind("T,k,m,I,err_est,slope_context\n", 0) == 0);
    CHECK(csv.find(",fit\n") != std::string::npos);
    const auto js = report_to_json(rep);
    CHECK(js.find("\"slope\":") != std::string::npos);
}
