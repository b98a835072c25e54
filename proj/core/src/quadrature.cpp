#include "zetalab/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zetalab::quadrature {

namespace {

long double pairwise_rec(const long double* v, std::size_t n) {
    if (n <= 8) {
        long double s = 0.0L;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_rec(v, half) + pairwise_rec(v + half, n - half);
}

// Simpson over the subsequence values[0], values[stride], ... (count points,
// spacing h*stride), blockwise pairwise reduction.
double simpson_strided(const double* v, std::size_t count, double h, std::size_t stride) {
    if (count < 3) throw std::invalid_argument("simpson: need at least 3 points");
    const std::size_t intervals = count - 1;
    const std::size_t simpson_intervals = (intervals % 2 == 0) ? intervals : intervals - 3;
    if (intervals % 2 != 0 && count < 4)
        throw std::invalid_argument("simpson: odd interval count needs >= 4 points");

    constexpr std::size_t kBlock = 4096;  // panels per partial sum
    std::vector<long double> blocks;
    long double acc = 0.0L;
    std::size_t in_block = 0;
    for (std::size_t i = 0; i < simpson_intervals; i += 2) {
        const double* p = v + i * stride;
        acc += static_cast<long double>(p[0]) + 4.0L * p[stride] + p[2 * stride];
        if (++in_block == kBlock) {
            blocks.push_back(acc);
            acc = 0.0L;
            in_block = 0;
        }
    }
    if (in_block != 0) blocks.push_back(acc);
    long double total = pairwise_rec(blocks.data(), blocks.size()) * h / 3.0L;
    if (simpson_intervals != intervals) {
        // 3/8 rule on the last three intervals
        const double* p = v + simpson_intervals * stride;
        total += (3.0L * h / 8.0L) *
                 (static_cast<long double>(p[0]) + 3.0L * p[stride] + 3.0L * p[2 * stride] +
                  p[3 * stride]);
    }
    return static_cast<double>(total);
}

}  // namespace

long double pairwise_sum(std::span<const long double> v) { return pairwise_rec(v.data(), v.size()); }

double simpson(std::span<const double> values, double h) {
    return simpson_strided(values.data(), values.size(), h, 1);
}

Result simpson_with_error(std::span<const double> values, double h) {
    Result r;
    r.value = simpson(values, h);
    // largest prefix whose interval count is divisible by 4, so the 2h rule
    // lands on the same endpoints
    const std::size_t intervals = values.size() - 1;
    const std::size_t m = intervals - intervals % 4;
    if (m >= 4) {
        const double fine = simpson_strided(values.data(), m + 1, h, 1);
        const double coarse = simpson_strided(values.data(), m / 2 + 1, 2.0 * h, 2);
        r.error_estimate = std::abs(fine - coarse);
    } else {
        r.error_estimate = std::abs(r.value);  // too few points to estimate
    }
    return r;
}

}  // namespace zetalab::quadrature
