#pragma once

// Exact-rational fact database and Hoelder chaining for upper bounds on
// mixed moments  int_0^T Delta^k(t) |zeta(1/2+it)|^{2m} dt.
//
// Every exponent is an exact Rational; log powers are either explicit or an
// unspecified generic constant C; epsilon exponents are a sticky boolean
// flag, never a number.

#include "zetalab/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetalab {

enum class Atom { delta_abs, zeta_abs };

const char* atom_name(Atom a);  // "|Delta|" / "|zeta|"

// A statement  int_0^T prod atom_i^{a_i} dt  <<  T^growth * log^? T * T^eps.
struct MomentFact {
    std::map<Atom, Rational> powers;      // exponents, all >= 0, map non-empty
    Rational growth;
    std::optional<Rational> log_power;    // nullopt = unspecified constant C
    bool has_epsilon = false;
    std::string label;                    // citation tag for rendering
    std::optional<std::string> condition; // set on hypothesis-dependent facts
};

// A pointwise statement  atom(t) << t^{exponent + eps}.
struct PointwiseFact {
    Atom atom;
    Rational exponent;  // 0 < exponent < 1
    std::string label;
};

class ValidityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponent of the zeta moment family: 1 + (A-4)/8 for 4 <= A <= 12.
Rational zeta_moment_exponent(const Rational& A);

// M(A) = max(A/4, theta*(A-2)) for 0 <= A <= 11.
Rational m_of_A(const Rational& A, const Rational& theta);

enum class ZetaPointwise { classic_32_205, bourgain_53_342 };

class FactDatabase {
public:
    FactDatabase() = default;

    const Rational& theta() const { return theta_; }
    void set_theta(Rational t) { theta_ = std::move(t); }

    ZetaPointwise zeta_pointwise_choice() const { return zeta_pw_; }
    void set_zeta_pointwise(ZetaPointwise z) { zeta_pw_ = z; }

    // Hypothesis slot for a constant A0 in (8, 262/27) with
    // int |Delta|^{A0} |zeta|^2 << T^{1+A0/4+eps}.  Facts derived through it
    // are reported as conditional, never asserted.
    void set_a0_hypothesis(const Rational& a0);
    void clear_a0_hypothesis() { a0_ = std::nullopt; }
    const std::optional<Rational>& a0_hypothesis() const { return a0_; }

    MomentFact mixed_eighth() const;                   // int Delta^8 |zeta|^2 << T^3 log T
    MomentFact zeta_moment(const Rational& A) const;   // A in [4,12]
    MomentFact delta_moment(const Rational& A) const;  // A in [0,11], exponent 1+M(A), eps
    MomentFact a0_fact() const;                        // requires hypothesis set
    PointwiseFact delta_pointwise() const;             // theta
    PointwiseFact zeta_pointwise() const;              // 32/205 or 53/342

    // eta_k values of the eighth-moment asymptotics error terms, k = 2..8,
    // plus the improved eta_2; stored as annotations only.
    static const std::map<int, Rational>& eta_table();
    static Rational improved_eta2();

    // Human-readable constant table with citation tags.
    std::string dump_constants() const;

private:
    Rational theta_ = Rational(131, 416);
    ZetaPointwise zeta_pw_ = ZetaPointwise::classic_32_205;
    std::optional<Rational> a0_;
};

struct HolderStep {
    MomentFact fact;
    Rational weight;  // 1/p_i
};

// A factor pulled out of the integral by its pointwise bound:
// contributes power * (exponent + eps) to the growth.
struct Extraction {
    PointwiseFact fact;
    Rational power;
};

struct Derivation {
    int k = 0;
    int m = 0;
    std::vector<Extraction> extractions;
    std::vector<HolderStep> steps;  // weights sum to 1 when non-empty
    MomentFact result;
    bool conditional = false;
};

// Hoelder's inequality: weights positive and summing to exactly 1; result
// powers and growth are the weighted sums; unspecified log constants and
// epsilons propagate.
MomentFact holder_combine(std::span<const MomentFact> facts, std::span<const Rational> weights);

// Enumerates the admissible strategies (direct facts, the eighth-moment
// split, two-factor moment splits over a rational weight grid, and
// pointwise-extraction hybrids) and returns the derivation of minimal
// growth; ties broken by lexicographically smallest weight vector.
Derivation derive_mixed_bound(int k, int m, const FactDatabase& db,
                              unsigned weight_denom_limit = 64,
                              bool use_a0_hypothesis = false);

// Best bound obtainable from the pointwise estimates alone (optionally
// closing with one moment fact).  Exact rational result.
Rational trivial_bound(int k, int m, const FactDatabase& db);

// 1 + k/4, conditional on the conjectured Delta exponent 1/4 and the
// Lindeloef Hypothesis.
Rational conjectural_exponent(int k, int m);

std::string render_derivation(const Derivation& d);

// Structured key-value rendering (JSON text) of a derivation.
std::string derivation_to_json(const Derivation& d);

}  // namespace zetalab
