#include "zetalab/divisor.hpp"

#include "zetalab/cache.hpp"
#include "zetalab/constants.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace zetalab {

namespace {

unsigned pick_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

double main_term(double x) {
    return x * (std::log(x) + 2.0 * kEulerGamma - 1.0);
}

}  // namespace

DivisorTable DivisorTable::sieve(std::uint64_t limit, unsigned threads) {
    if (limit == 0) throw std::invalid_argument("DivisorTable::sieve: limit must be >= 1");
    if (limit > kMaxEntries)
        throw std::length_error("DivisorTable::sieve: limit exceeds 2^31 entries; "
                                "use divisor_prefix_hyperbola for streaming access");
    DivisorTable t;
    t.limit_ = limit;
    t.counts_.assign(limit + 1, 0);

    const unsigned nthreads = pick_threads(threads);
    auto sieve_block = [&](std::uint64_t lo, std::uint64_t hi) {
        // counts[n] += 1 for every multiple n of k inside [lo, hi]
        for (std::uint64_t k = 1; k <= hi; ++k) {
            std::uint64_t first = ((lo + k - 1) / k) * k;
            for (std::uint64_t n = first; n <= hi; n += k) ++t.counts_[n];
        }
    };
    if (nthreads <= 1 || limit < 4096) {
        sieve_block(1, limit);
    } else {
        // disjoint index blocks; merge is trivial since blocks do not overlap
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (limit + nthreads - 1) / nthreads;
        for (unsigned i = 0; i < nthreads; ++i) {
            const std::uint64_t lo = 1 + i * chunk;
            if (lo > limit) break;
            const std::uint64_t hi = std::min(limit, lo + chunk - 1);
            workers.emplace_back(sieve_block, lo, hi);
        }
        for (auto& w : workers) w.join();
    }
    t.build_prefix();
    return t;
}

void DivisorTable::build_prefix() {
    prefix_.assign(limit_ + 1, 0);
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= limit_; ++n) {
        acc += counts_[n];
        prefix_[n] = acc;
    }
}

std::uint32_t DivisorTable::count(std::uint64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("DivisorTable::count: n outside table");
    return counts_[n];
}

std::uint64_t DivisorTable::prefix(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("DivisorTable::prefix: n outside table");
    return prefix_[n];
}

void DivisorTable::save(const std::filesystem::path& file) const {
    cache::Writer w(file, cache::kDivisorMagic, cache::kFormatVersion);
    w.write_u64(limit_);
    w.write_u32_array(counts_.data() + 1, limit_);
    w.finish();
}

DivisorTable DivisorTable::load(const std::filesystem::path& file) {
    cache::Reader r(file, cache::kDivisorMagic, cache::kFormatVersion);
    DivisorTable t;
    t.limit_ = r.read_u64();
    if (t.limit_ == 0 || t.limit_ > kMaxEntries)
        throw cache::CacheError("divisor cache: implausible table size in " + file.string());
    t.counts_.assign(t.limit_ + 1, 0);
    r.read_u32_array(t.counts_.data() + 1, t.limit_);
    r.expect_eof();
    t.build_prefix();
    return t;
}

TwoSquaresTable TwoSquaresTable::build(std::uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("TwoSquaresTable::build: limit must be >= 1");
    if (limit > DivisorTable::kMaxEntries)
        throw std::length_error("TwoSquaresTable::build: limit exceeds 2^31 entries");
    TwoSquaresTable t;
    t.limit_ = limit;
    t.counts_.assign(limit + 1, 0);
    const auto amax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    for (std::int64_t a = -amax; a <= amax; ++a) {
        const std::uint64_t aa = static_cast<std::uint64_t>(a * a);
        if (aa > limit) continue;
        for (std::int64_t b = -amax; b <= amax; ++b) {
            const std::uint64_t n = aa + static_cast<std::uint64_t>(b * b);
            if (n >= 1 && n <= limit) ++t.counts_[n];
        }
    }
    t.prefix_.assign(limit + 1, 0);
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc += t.counts_[n];
        t.prefix_[n] = acc;
    }
    return t;
}

std::uint32_t TwoSquaresTable::count(std::uint64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("TwoSquaresTable::count: n outside table");
    return counts_[n];
}

std::uint64_t TwoSquaresTable::prefix(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("TwoSquaresTable::prefix: n outside table");
    return prefix_[n];
}

std::uint64_t divisor_prefix_hyperbola(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while ((root + 1) * (root + 1) <= x) ++root;
    while (root * root > x) --root;
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k <= root; ++k) sum += x / k;
    return 2 * sum - root * root;
}

double delta(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::invalid_argument("delta: requires x >= 1");
    const auto fl = static_cast<std::uint64_t>(std::floor(x));
    if (fl > table.limit()) throw std::out_of_range("delta: x exceeds table range");
    return static_cast<double>(table.prefix(fl)) - main_term(x);
}

double delta_star(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::invalid_argument("delta_star: requires x >= 1");
    if (std::floor(4.0 * x) > static_cast<double>(table.limit()))
        throw std::out_of_range("delta_star: 4x exceeds table range");
    return -delta(x, table) + 2.0 * delta(2.0 * x, table) - 0.5 * delta(4.0 * x, table);
}

double delta_star_alternating(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::invalid_argument("delta_star_alternating: requires x >= 1");
    const auto fl = static_cast<std::uint64_t>(std::floor(4.0 * x));
    if (fl > table.limit()) throw std::out_of_range("delta_star_alternating: 4x exceeds table range");
    std::int64_t alt = 0;
    for (std::uint64_t n = 1; n <= fl; ++n) {
        const auto d = static_cast<std::int64_t>(table.count(n));
        alt += (n % 2 == 0) ? d : -d;
    }
    return 0.5 * static_cast<double>(alt) - main_term(x);
}

double circle_error(double x, const TwoSquaresTable& table) {
    if (!(x >= 0.0)) throw std::invalid_argument("circle_error: requires x >= 0");
    const auto fl = static_cast<std::uint64_t>(std::floor(x));
    if (fl > table.limit()) throw std::out_of_range("circle_error: x exceeds table range");
    return static_cast<double>(table.prefix(fl)) - kPi * x;
}

double HyperbolaDeltaSource::delta_at(double t) const {
    if (!(t >= 1.0)) throw std::invalid_argument("HyperbolaDeltaSource: requires t >= 1");
    const auto fl = static_cast<std::uint64_t>(std::floor(t));
    if (fl != cached_n_) {
        cached_prefix_ = divisor_prefix_hyperbola(fl);
        cached_n_ = fl;
    }
    return static_cast<double>(cached_prefix_) - t * (std::log(t) + 2.0 * kEulerGamma - 1.0);
}

}  // namespace zetalab
