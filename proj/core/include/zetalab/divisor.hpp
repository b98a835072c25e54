#pragma once

// Divisor-count sieves and the error terms of the divisor and circle
// problems:
//
//   Delta(x)  = sum_{n<=x} d(n) - x(log x + 2*gamma - 1)
//   Delta*(x) = -Delta(x) + 2*Delta(2x) - Delta(4x)/2
//   P(x)      = sum_{n<=x} r(n) - pi*x
//
// Tables hold exact integer counts and prefix sums; only the main terms are
// evaluated in floating point.  Per-entry footprint of DivisorTable is
// 12 bytes (u32 count + u64 prefix).

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace zetalab {

class DivisorTable {
public:
    // Increment-by-multiples sieve, O(N log N).  threads = 0 picks the
    // hardware count; the result is identical for any thread count.
    static DivisorTable sieve(std::uint64_t limit, unsigned threads = 0);

    std::uint64_t limit() const { return limit_; }
    std::uint32_t count(std::uint64_t n) const;   // d(n), 1 <= n <= limit
    std::uint64_t prefix(std::uint64_t n) const;  // sum_{m<=n} d(m); prefix(0) = 0
    std::span<const std::uint32_t> counts() const { return {counts_.data() + 1, limit_}; }

    // Binary cache: magic "DIVTBL01", version u32, N u64, N little-endian
    // u32 counts.  Prefix sums are rebuilt on load.
    void save(const std::filesystem::path& file) const;
    static DivisorTable load(const std::filesystem::path& file);

    // Tables above this entry count are rejected with std::length_error;
    // use divisor_prefix_hyperbola for streaming access beyond it.
    static constexpr std::uint64_t kMaxEntries = (1ull << 31);

private:
    DivisorTable() = default;
    void build_prefix();

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> counts_;  // index 0 unused
    std::vector<std::uint64_t> prefix_;  // prefix_[n], n = 0..limit
};

class TwoSquaresTable {
public:
    // r(n) = #{(a,b) in Z^2 : a^2 + b^2 = n}, built by lattice accumulation.
    static TwoSquaresTable build(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    std::uint32_t count(std::uint64_t n) const;
    std::uint64_t prefix(std::uint64_t n) const;

private:
    TwoSquaresTable() = default;
    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> prefix_;
};

// Exact sum_{n<=x} d(n) by the hyperbola identity
// 2*sum_{k<=sqrt(x)} floor(x/k) - floor(sqrt(x))^2, O(sqrt(x)) time, no table.
std::uint64_t divisor_prefix_hyperbola(std::uint64_t x);

double delta(double x, const DivisorTable& table);

// Canonical form -Delta(x) + 2*Delta(2x) - Delta(4x)/2; needs floor(4x) <= limit.
double delta_star(double x, const DivisorTable& table);
// Equivalent alternating-sum form (1/2) sum_{n<=4x} (-1)^n d(n) - x(log x + 2*gamma - 1).
double delta_star_alternating(double x, const DivisorTable& table);

double circle_error(double x, const TwoSquaresTable& table);

// Point source for Delta(t) used by the moment integrator.
class DeltaSource {
public:
    virtual ~DeltaSource() = default;
    virtual double delta_at(double t) const = 0;
    virtual double max_t() const = 0;
};

class TableDeltaSource final : public DeltaSource {
public:
    explicit TableDeltaSource(const DivisorTable& table) : table_(&table) {}
    double delta_at(double t) const override { return delta(t, *table_); }
    double max_t() const override { return static_cast<double>(table_->limit()); }

private:
    const DivisorTable* table_;
};

// Streaming source for arguments beyond the table cap: prefix sums come from
// the hyperbola identity, memoized per integer part (cheap for the
// monotone access pattern of quadrature).
class HyperbolaDeltaSource final : public DeltaSource {
public:
    explicit HyperbolaDeltaSource(double max_t) : max_t_(max_t) {}
    double delta_at(double t) const override;
    double max_t() const override { return max_t_; }

private:
    double max_t_;
    mutable std::uint64_t cached_n_ = 0;
    mutable std::uint64_t cached_prefix_ = 0;
};

}  // namespace zetalab
