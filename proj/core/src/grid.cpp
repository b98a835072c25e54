#include "zetalab/grid.hpp"

#include "zetalab/cache.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zetalab {

namespace {

double value_sq_at(double t) {
    if (t >= 10.0) {
        const double z = rs_z(t);
        return z * z;
    }
    return std::norm(zeta_half_em(t));
}

}  // namespace

SampleGrid sample_critical_line(double t0, double t1, double h, int threads) {
    if (!(t0 >= 2.0 && t0 < t1)) throw std::invalid_argument("sample_critical_line: need 2 <= t0 < t1");
    if (!(h > 0.0 && h <= 0.05))
        throw std::invalid_argument("sample_critical_line: need 0 < h <= 0.05");

    SampleGrid g;
    g.t0 = t0;
    g.t1 = t1;
    g.h = h;
    const auto count = static_cast<std::size_t>(std::floor((t1 - t0) / h + 0.5)) + 1;
    g.values.resize(count);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), count);

    // Each thread fills a disjoint range of the preallocated array; the value
    // at index j depends only on t0 + j*h, so the result is independent of
    // the partitioning.
    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) g.values[j] = value_sq_at(g.t_at(j));
    };
    if (nthreads == 1) {
        fill(0, count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        const std::size_t chunk = (count + nthreads - 1) / nthreads;
        for (std::size_t i = 0; i < nthreads; ++i) {
            const std::size_t lo = i * chunk;
            const std::size_t hi = std::min(lo + chunk, count);
            if (lo >= hi) break;
            pool.emplace_back(fill, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return g;
}

void save_grid(const SampleGrid& g, const std::string& path) {
    cache::Writer w(path, cache::kGridMagic, cache::kFormatVersion);
    w.write_f64(g.t0);
    w.write_f64(g.t1);
    w.write_f64(g.h);
    w.write_u64(g.values.size());
    w.write_f64_array(g.values.data(), g.values.size());
    w.finish();
}

SampleGrid load_grid(const std::string& path) {
    cache::Reader r(path, cache::kGridMagic, cache::kFormatVersion);
    SampleGrid g;
    g.t0 = r.read_f64();
    g.t1 = r.read_f64();
    g.h = r.read_f64();
    const std::uint64_t n = r.read_u64();
    g.values.resize(n);
    r.read_f64_array(g.values.data(), n);
    r.expect_eof();
    return g;
}

EResult mean_square_error_E(double T, const SampleGrid& grid) {
    if (grid.t0 != 2.0)
        throw std::invalid_argument("mean_square_error_E: grid must start at t0 = 2");
    if (!(T > grid.t0 && T <= grid.t1 + 0.5 * grid.h))
        throw std::invalid_argument("mean_square_error_E: T outside the grid range");

    // Head segment [0, 2]: |zeta|^2 is smooth and small here; fixed step 0.01.
    constexpr double kHeadStep = 0.01;
    constexpr std::size_t kHeadCount = 201;
    static const auto head = [] {
        std::vector<double> v(kHeadCount);
        for (std::size_t j = 0; j < kHeadCount; ++j)
            v[j] = std::norm(zeta_half_em(kHeadStep * static_cast<double>(j)));
        return v;
    }();
    const auto head_res = quadrature::simpson_with_error(head, kHeadStep);

    // Main segment [2, T] from the grid, truncated at the last node <= T.
    const auto last = static_cast<std::size_t>(std::floor((T - grid.t0) / grid.h + 0.5));
    if (last + 1 > grid.values.size())
        throw std::invalid_argument("mean_square_error_E: grid too short for T");
    const auto main_res = quadrature::simpson_with_error(
        std::span<const double>(grid.values.data(), last + 1), grid.h);
    const double t_end = grid.t_at(last);

    // Close any sub-step gap (T not on a node) with one trapezoid panel.
    double tail = 0.0;
    if (T > t_end) tail = 0.5 * (T - t_end) * (grid.values[last] + value_sq_at(T));

    EResult res;
    const double integral = head_res.value + main_res.value + tail;
    res.value = integral - T * (std::log(T / (2.0 * kPi)) + 2.0 * kEulerGamma - 1.0);
    res.error_estimate = head_res.error_estimate + main_res.error_estimate;
    return res;
}

}  // namespace zetalab
