#include "zetalab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zetalab {

namespace {

double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

quadrature::Result mixed_moment(const SampleGrid& grid, double T, int k, int m,
                                const DeltaSource& delta_source) {
    if (k < 0 || m < 0) throw std::invalid_argument("mixed_moment: need k, m >= 0");
    if (!(T > grid.t0 && T <= grid.t1 + 0.5 * grid.h))
        throw std::invalid_argument("mixed_moment: T outside the grid range");
    if (k > 0 && T > delta_source.max_t() + 0.5)
        throw std::invalid_argument("mixed_moment: T beyond the Delta source range");

    const auto last = static_cast<std::size_t>(std::floor((T - grid.t0) / grid.h + 0.5));
    if (last + 1 > grid.values.size())
        throw std::invalid_argument("mixed_moment: grid too short for T");
    if (last + 1 < 3) throw std::invalid_argument("mixed_moment: fewer than 3 grid points");

    std::vector<double> integrand(last + 1);
    for (std::size_t j = 0; j <= last; ++j) {
        double v = 1.0;
        if (k > 0) v *= int_pow(delta_source.delta_at(grid.t_at(j)), k);
        if (m > 0) v *= int_pow(grid.values[j], m);
        integrand[j] = v;
    }
    return quadrature::simpson_with_error(integrand, grid.h);
}

std::vector<double> augment_largest_decade(std::vector<double> T) {
    if (T.empty()) throw std::invalid_argument("augment_largest_decade: empty point list");
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    const double max_t = T.back();
    const double decade_lo = max_t / 10.0;

    auto in_decade = [&](double t) { return t >= decade_lo * (1.0 - 1.0e-12); };
    auto decade_points = [&] {
        std::vector<double> d;
        for (double t : T)
            if (in_decade(t)) d.push_back(t);
        return d;
    };

    auto d = decade_points();
    if (d.size() < 2 && !in_decade(decade_lo)) {
        // shouldn't happen (decade_lo is in the decade by construction)
    }
    if (d.size() == 1) {
        T.insert(std::lower_bound(T.begin(), T.end(), decade_lo), decade_lo);
        d = decade_points();
    }
    while (d.size() < 3) {
        // split the widest log gap with a geometric midpoint
        std::size_t best = 0;
        double best_gap = 0.0;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            const double gap = std::log(d[i + 1] / d[i]);
            if (gap > best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        double mid = std::sqrt(d[best] * d[best + 1]);
        if (mid >= 100.0) mid = std::round(mid);
        T.insert(std::lower_bound(T.begin(), T.end(), mid), mid);
        d = decade_points();
    }
    return T;
}

std::vector<MomentPoint> moment_series(const SampleGrid& grid, const MomentRequest& request,
                                       const DeltaSource& delta_source) {
    const auto all = augment_largest_decade(request.T);
    std::vector<double> requested = request.T;
    std::sort(requested.begin(), requested.end());
    const double decade_lo = all.back() / 10.0 * (1.0 - 1.0e-12);

    std::vector<MomentPoint> out;
    out.reserve(all.size());
    for (double t : all) {
        MomentPoint p;
        p.T = t;
        const auto res = mixed_moment(grid, t, request.k, request.m, delta_source);
        p.I = res.value;
        p.err_est = res.error_estimate;
        const bool original = std::binary_search(requested.begin(), requested.end(), t);
        if (t >= decade_lo)
            p.slope_context = original ? "fit" : "fit-aux";
        else
            p.slope_context = "excluded";
        out.push_back(std::move(p));
    }
    return out;
}

FitResult fit_growth_exponent(std::span<const double> T, std::span<const double> I, bool use_abs) {
    if (T.size() != I.size()) throw std::invalid_argument("fit_growth_exponent: length mismatch");
    if (T.size() < 3) throw std::invalid_argument("fit_growth_exponent: need at least 3 points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!(T[i] > 0.0)) throw std::invalid_argument("fit_growth_exponent: T must be positive");
        double v = I[i];
        if (use_abs) v = std::abs(v);
        if (!(v > 0.0))
            throw std::invalid_argument("fit_growth_exponent: non-positive moment value");
        const double x = std::log(T[i]);
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (!(denom > 0.0)) throw std::invalid_argument("fit_growth_exponent: degenerate abscissae");
    FitResult r;
    r.slope = (n * sxy - sx * sy) / denom;
    r.intercept = (sy - r.slope * sx) / n;
    r.points_used = T.size();
    return r;
}

FitResult fit_series(const std::vector<MomentPoint>& points, bool use_abs) {
    std::vector<double> T, I;
    for (const auto& p : points) {
        if (p.slope_context == "fit" || p.slope_context == "fit-aux") {
            T.push_back(p.T);
            I.push_back(p.I);
        }
    }
    return fit_growth_exponent(T, I, use_abs);
}

MomentReport compare_with_bounds(const SampleGrid& grid, const MomentRequest& request,
                                 const DeltaSource& delta_source, const FactDatabase& db) {
    MomentReport rep;
    rep.k = request.k;
    rep.m = request.m;
    rep.points = moment_series(grid, request, delta_source);
    rep.fit = fit_series(rep.points, request.k % 2 == 1);
    if (request.k >= 1 && request.m >= 1) {
        const auto d = derive_mixed_bound(request.k, request.m, db);
        rep.derived_exponent = to_double(d.result.growth);
        rep.derived_label = d.result.label;
        rep.trivial_exponent = to_double(trivial_bound(request.k, request.m, db));
        rep.conjectural = to_double(conjectural_exponent(request.k, request.m));
    } else if (request.k == 0) {
        // pure zeta moment: compare against the moment-family exponent when
        // it applies, otherwise 1 (the mean-value asymptotic for 2m <= 4)
        rep.derived_exponent = (2 * request.m >= 4)
                                   ? to_double(zeta_moment_exponent(Rational(2 * request.m)))
                                   : 1.0;
        rep.trivial_exponent = rep.derived_exponent;
        rep.conjectural = 1.0;
        rep.derived_label = "zeta moment family";
    } else {  // m == 0: pure Delta moment
        rep.derived_exponent = to_double(Rational(1) + m_of_A(Rational(request.k), db.theta()));
        rep.trivial_exponent = rep.derived_exponent;
        rep.conjectural = to_double(conjectural_exponent(request.k, 0));
        rep.derived_label = "Delta moment family";
    }
    return rep;
}

std::string report_to_csv(const MomentReport& r) {
    std::ostringstream os;
    os << "T,k,m,I,err_est,slope_context\n";
    for (const auto& p : r.points)
        os << fmt17(p.T) << ',' << r.k << ',' << r.m << ',' << fmt17(p.I) << ','
           << fmt17(p.err_est) << ',' << p.slope_context << '\n';
    return os.str();
}

std::string report_to_json(const MomentReport& r) {
    std::ostringstream os;
    os << "{\"k\":" << r.k << ",\"m\":" << r.m << ",\"slope\":" << fmt17(r.fit.slope)
       << ",\"intercept\":" << fmt17(r.fit.intercept)
       << ",\"points_used\":" << r.fit.points_used
       << ",\"derived_exponent\":" << fmt17(r.derived_exponent)
       << ",\"trivial_exponent\":" << fmt17(r.trivial_exponent)
       << ",\"conjectural_exponent\":" << fmt17(r.conjectural) << ",\"derived_label\":\""
       << r.derived_label << "\",\"points\":[";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        os << (i ? "," : "") << "{\"T\":" << fmt17(p.T) << ",\"I\":" << fmt17(p.I)
           << ",\"err_est\":" << fmt17(p.err_est) << ",\"slope_context\":\"" << p.slope_context
           << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace zetalab
