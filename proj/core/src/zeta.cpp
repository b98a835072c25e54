#include "zetalab/zeta.hpp"

#include "zetalab/constants.hpp"
#include "zetalab/rs_coeffs.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zetalab {

namespace {

// B_{2r} for r = 1..20 as exact numerator/denominator pairs.
struct BernoulliPair {
    long double num, den;
};
constexpr BernoulliPair kBernoulli[] = {
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
    {-7709321041217.0L, 510.0L},
    {2577687858367.0L, 6.0L},
    {-26315271553053477373.0L, 1919190.0L},
    {2929993913841559.0L, 6.0L},
    {-261082718496449122051.0L, 13530.0L},
};
constexpr int kMaxCorrections = static_cast<int>(sizeof(kBernoulli) / sizeof(kBernoulli[0]));

double cheb_eval(const double* c, std::size_t n, double u) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = n; i-- > 1;) {
        const double tmp = b1;
        b1 = 2.0 * u * b1 - b2 + c[i];
        b2 = tmp;
    }
    return u * b1 - b2 + 0.5 * c[0];
}

}  // namespace

std::complex<double> zeta_half_em(double t, double precision_target) {
    if (!(t >= 0.0)) throw std::invalid_argument("zeta_half_em: requires t >= 0");
    if (t > kEmMaxT)
        throw std::out_of_range("zeta_half_em: t outside oracle regime (t <= 1e4)");
    if (!(precision_target >= 1.0e-12))
        throw std::invalid_argument("zeta_half_em: precision_target must be >= 1e-12");

    const auto tl = static_cast<long double>(t);
    const long long N = std::max<long long>(24, static_cast<long long>(std::ceil(t)) + 8);

    // log n and n^{-1/2} for every n the truncation can reach; built once
    static const auto tables = [] {
        const std::size_t cap = static_cast<std::size_t>(kEmMaxT) + 16;
        std::vector<std::pair<long double, long double>> t(cap + 1);
        for (std::size_t n = 1; n <= cap; ++n)
            t[n] = {std::log(static_cast<long double>(n)),
                    1.0L / std::sqrt(static_cast<long double>(n))};
        return t;
    }();

    // Dirichlet sum up to N-1
    std::complex<long double> sum(0.0L, 0.0L);
    for (long long n = 1; n < N; ++n) {
        const auto& [ln, amp] = tables[static_cast<std::size_t>(n)];
        const long double ph = tl * ln;
        sum += std::complex<long double>(amp * std::cos(ph), -amp * std::sin(ph));
    }

    const long double lnN = std::log(static_cast<long double>(N));
    const long double sqrtN = std::sqrt(static_cast<long double>(N));
    const std::complex<long double> s(0.5L, tl);
    // N^{1-s}/(s-1) + N^{-s}/2
    const std::complex<long double> Nms =
        std::complex<long double>(std::cos(tl * lnN), -std::sin(tl * lnN)) / sqrtN;
    sum += Nms * static_cast<long double>(N) / (s - 1.0L);
    sum += Nms * 0.5L;

    // Euler-Maclaurin tail: B_{2r}/(2r)! * s(s+1)...(s+2r-2) * N^{1-s-2r}
    std::complex<long double> poch = s;        // rising product up to s+2r-2
    long double fact = 2.0L;                   // (2r)!
    long double Npow = 1.0L / static_cast<long double>(N);  // N^{1-2r}
    bool converged = false;
    for (int r = 1; r <= kMaxCorrections; ++r) {
        const long double b = kBernoulli[r - 1].num / kBernoulli[r - 1].den;
        const std::complex<long double> term = (b / fact) * poch * Nms * Npow;
        sum += term;
        if (std::abs(term) < 0.1L * static_cast<long double>(precision_target)) {
            converged = true;
            break;
        }
        // advance to next r
        poch *= (s + static_cast<long double>(2 * r - 1)) * (s + static_cast<long double>(2 * r));
        fact *= static_cast<long double>(2 * r + 1) * static_cast<long double>(2 * r + 2);
        Npow /= static_cast<long double>(N) * static_cast<long double>(N);
    }
    if (!converged)
        throw std::runtime_error("zeta_half_em: tail did not converge within the iteration cap");
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

long double rs_theta(long double t) {
    const long double tau = t / (2.0L * kPiL);
    const long double t2 = t * t;
    return 0.5L * t * std::log(tau) - 0.5L * t - kPiL / 8.0L + 1.0L / (48.0L * t) +
           7.0L / (5760.0L * t * t2) + 31.0L / (80640.0L * t2 * t2 * t);
}

double rs_z(double t) {
    if (!(t >= 10.0))
        throw std::out_of_range("rs_z: fast path requires t >= 10; use the oracle below");
    const auto tl = static_cast<long double>(t);
    const long double tau = tl / (2.0L * kPiL);
    const long double a = std::sqrt(tau);
    const auto N = static_cast<long long>(a);
    const double p = static_cast<double>(a - static_cast<long double>(N));
    const long double th = rs_theta(tl);

    // log n and n^{-1/2} memoized across calls (the main-sum length only
    // grows like sqrt(t)); doubling growth keeps reallocation rare
    static thread_local std::vector<std::pair<long double, double>> terms{{0.0L, 0.0}};
    while (static_cast<long long>(terms.size()) <= N) {
        const auto n = static_cast<long double>(terms.size());
        terms.emplace_back(std::log(n), 1.0 / std::sqrt(static_cast<double>(n)));
    }

    double main = 0.0;
    for (long long n = 1; n <= N; ++n) {
        const auto& [ln, rsqrt] = terms[static_cast<std::size_t>(n)];
        const long double ph = th - tl * ln;
        const auto phr = static_cast<double>(std::fmod(ph, 2.0L * kPiL));
        main += std::cos(phr) * rsqrt;
    }
    main *= 2.0;

    const double u = 2.0 * p - 1.0;
    const double x = static_cast<double>(1.0L / a);
    double corr = 0.0, xp = 1.0;
    for (std::size_t k = 0; k < detail::kRsOrders; ++k) {
        corr += cheb_eval(detail::kRsChebPtr[k], detail::kRsChebLen[k], u) * xp;
        xp *= x;
    }
    const double sign = (N % 2 == 0) ? -1.0 : 1.0;
    return main + sign * corr * static_cast<double>(std::pow(tau, -0.25L));
}

double zeta_half_rs(double t) { return std::abs(rs_z(t)); }

}  // namespace zetalab
