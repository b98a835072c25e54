#include "zetalab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zetalab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

void require_range(const Rational& v, const Rational& lo, const Rational& hi,
                   const std::string& what) {
    if (v < lo || v > hi)
        throw ValidityError(what + ": value " + to_string(v) + " outside [" + to_string(lo) +
                            ", " + to_string(hi) + "]");
}

}  // namespace

const char* atom_name(Atom a) {
    return a == Atom::delta_abs ? "|Delta|" : "|zeta|";
}

Rational zeta_moment_exponent(const Rational& A) {
    require_range(A, rat(4), rat(12), "zeta moment family");
    return kOne + (A - rat(4)) / rat(8);
}

Rational m_of_A(const Rational& A, const Rational& theta) {
    require_range(A, rat(0), rat(11), "Delta moment family");
    const Rational a4 = A / rat(4);
    const Rational tb = theta * (A - rat(2));
    return std::max(a4, tb);
}

void FactDatabase::set_a0_hypothesis(const Rational& a0) {
    if (a0 <= rat(8) || a0 >= rat(262, 27))
        throw ValidityError("A0 hypothesis must lie strictly between 8 and 262/27");
    a0_ = a0;
}

MomentFact FactDatabase::mixed_eighth() const {
    MomentFact f;
    f.powers[Atom::delta_abs] = rat(8);
    f.powers[Atom::zeta_abs] = rat(2);
    f.growth = rat(3);
    f.log_power = kOne;
    f.has_epsilon = false;
    f.label = "mixed eighth-moment bound";
    return f;
}

MomentFact FactDatabase::zeta_moment(const Rational& A) const {
    MomentFact f;
    f.powers[Atom::zeta_abs] = A;
    f.growth = zeta_moment_exponent(A);
    f.log_power = std::nullopt;  // generic constant C(A)
    f.has_epsilon = false;
    f.label = "zeta moment family, A = " + to_string(A);
    return f;
}

MomentFact FactDatabase::delta_moment(const Rational& A) const {
    MomentFact f;
    f.powers[Atom::delta_abs] = A;
    f.growth = kOne + m_of_A(A, theta_);
    f.log_power = kZero;
    f.has_epsilon = true;
    f.label = "Delta moment family, A = " + to_string(A);
    return f;
}

MomentFact FactDatabase::a0_fact() const {
    if (!a0_) throw std::logic_error("a0_fact: no A0 hypothesis set");
    MomentFact f;
    f.powers[Atom::delta_abs] = *a0_;
    f.powers[Atom::zeta_abs] = rat(2);
    f.growth = kOne + *a0_ / rat(4);
    f.log_power = kZero;
    f.has_epsilon = true;
    f.label = "hypothetical mixed moment, A0 = " + to_string(*a0_);
    f.condition = "assumes int |Delta|^{A0} |zeta|^2 << T^{1+A0/4+eps} with A0 = " + to_string(*a0_);
    return f;
}

PointwiseFact FactDatabase::delta_pointwise() const {
    return {Atom::delta_abs, theta_, "Delta pointwise bound, theta = " + to_string(theta_)};
}

PointwiseFact FactDatabase::zeta_pointwise() const {
    const Rational sigma = zeta_pw_ == ZetaPointwise::classic_32_205 ? rat(32, 205) : rat(53, 342);
    return {Atom::zeta_abs, sigma, "zeta pointwise bound, sigma = " + to_string(sigma)};
}

const std::map<int, Rational>& FactDatabase::eta_table() {
    static const std::map<int, Rational> table = {
        {2, rat(1, 10)},    {3, rat(1, 10)},    {4, rat(1, 10)},   {5, rat(3, 80)},
        {6, rat(35, 4742)}, {7, rat(17, 6312)}, {8, rat(8, 9433)},
    };
    return table;
}

Rational FactDatabase::improved_eta2() { return rat(3, 20); }

std::string FactDatabase::dump_constants() const {
    std::ostringstream os;
    os << "constant            value        decimal       note\n";
    os << "theta               " << to_string(theta_) << "      " << to_decimal_string(theta_, 6)
       << "      Delta pointwise exponent\n";
    const auto zpw = zeta_pointwise();
    os << "sigma_zeta          " << to_string(zpw.exponent) << "       "
       << to_decimal_string(zpw.exponent, 6) << "      zeta pointwise exponent ("
       << (zeta_pw_ == ZetaPointwise::classic_32_205 ? "classic" : "Bourgain") << ")\n";
    for (const auto& [k, eta] : eta_table())
        os << "eta_" << k << "               " << to_string(eta) << "      "
           << to_decimal_string(eta, 6) << "      eighth-moment error exponent, k = " << k << "\n";
    os << "eta_2 (improved)    " << to_string(improved_eta2()) << "         "
       << to_decimal_string(improved_eta2(), 6) << "      annotation only\n";
    os << "A0 hypothesis       " << (a0_ ? to_string(*a0_) : std::string("unset"))
       << "      conditional mixed-moment slot\n";
    return os.str();
}

MomentFact holder_combine(std::span<const MomentFact> facts, std::span<const Rational> weights) {
    if (facts.empty() || facts.size() != weights.size())
        throw std::invalid_argument("holder_combine: facts/weights size mismatch");
    Rational wsum = kZero;
    for (const auto& w : weights) {
        if (w <= kZero) throw std::invalid_argument("holder_combine: weights must be positive");
        wsum += w;
    }
    if (wsum != kOne)
        throw std::invalid_argument("holder_combine: weights sum to " + to_string(wsum) +
                                    ", expected exactly 1");
    MomentFact out;
    out.growth = kZero;
    out.log_power = kZero;
    for (std::size_t i = 0; i < facts.size(); ++i) {
        const auto& f = facts[i];
        const auto& w = weights[i];
        for (const auto& [atom, p] : f.powers) {
            auto [it, inserted] = out.powers.emplace(atom, p * w);
            if (!inserted) it->second += p * w;
        }
        out.growth += f.growth * w;
        if (out.log_power && f.log_power)
            *out.log_power += *f.log_power * w;
        else
            out.log_power = std::nullopt;  // unspecified C is sticky
        out.has_epsilon = out.has_epsilon || f.has_epsilon;
        if (f.condition) {
            if (out.condition)
                *out.condition += "; " + *f.condition;
            else
                out.condition = f.condition;
        }
    }
    out.label = "Hoelder combination";
    return out;
}

namespace {

// Reduced fractions p/q with q <= limit, 0 < p/q < 1, ascending.
std::vector<Rational> weight_grid(unsigned limit) {
    std::vector<Rational> grid;
    for (unsigned q = 2; q <= limit; ++q)
        for (unsigned p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) grid.emplace_back(BigInt(p), BigInt(q));
    std::sort(grid.begin(), grid.end());
    return grid;
}

std::vector<Rational> weight_vector(const Derivation& d) {
    std::vector<Rational> v;
    v.reserve(d.steps.size());
    for (const auto& s : d.steps) v.push_back(s.weight);
    return v;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Builds the result fact of a candidate and checks the power bookkeeping
// against the target monomial.
Derivation finish(int k, int m, std::vector<Extraction> extr, std::vector<HolderStep> steps) {
    Derivation d;
    d.k = k;
    d.m = m;
    d.extractions = std::move(extr);
    d.steps = std::move(steps);

    MomentFact res;
    if (!d.steps.empty()) {
        std::vector<MomentFact> fs;
        std::vector<Rational> ws;
        for (const auto& s : d.steps) {
            fs.push_back(s.fact);
            ws.push_back(s.weight);
        }
        res = holder_combine(fs, ws);
    } else {
        res.growth = kOne;  // int_0^T dt = T
        res.log_power = kZero;
    }
    for (const auto& e : d.extractions) {
        res.growth += e.power * e.fact.exponent;
        res.has_epsilon = true;
        auto [it, inserted] = res.powers.emplace(e.fact.atom, e.power);
        if (!inserted) it->second += e.power;
    }
    // bookkeeping: powers must reproduce the target monomial exactly
    const Rational want_d = rat(k), want_z = rat(2LL * m);
    auto power_of = [&](Atom a) {
        auto it = res.powers.find(a);
        return it == res.powers.end() ? kZero : it->second;
    };
    if (power_of(Atom::delta_abs) != want_d || power_of(Atom::zeta_abs) != want_z)
        throw std::logic_error("derive_mixed_bound: power bookkeeping mismatch");
    res.label = "derived mixed-moment bound";
    d.conditional = res.condition.has_value();
    d.result = std::move(res);
    return d;
}

}  // namespace

Derivation derive_mixed_bound(int k, int m, const FactDatabase& db, unsigned weight_denom_limit,
                              bool use_a0_hypothesis) {
    if (k < 1 || k > 8 || m < 1 || m > 3)
        throw ValidityError("derive_mixed_bound: strategies cover 1 <= k <= 8, 1 <= m <= 3");
    if (weight_denom_limit < 2)
        throw std::invalid_argument("derive_mixed_bound: weight denominator limit must be >= 2");

    const auto grid = weight_grid(weight_denom_limit);
    std::optional<Derivation> best;
    std::vector<std::string> failures;

    auto consider = [&](Derivation cand) {
        if (!best) {
            best = std::move(cand);
            return;
        }
        if (cand.result.growth < best->result.growth ||
            (cand.result.growth == best->result.growth &&
             lex_less(weight_vector(cand), weight_vector(*best))))
            best = std::move(cand);
    };

    // residual (kd Delta powers, zz zeta powers) after optional pointwise
    // extraction; extractions already fixed
    auto residual_strategies = [&](int kd, int zz, const std::vector<Extraction>& extr) {
        const Rational rkd = rat(kd), rzz = rat(zz);
        if (kd == 0 && zz == 0) {
            if (!extr.empty()) consider(finish(k, m, extr, {}));
            return;
        }
        // direct single facts
        if (kd == 0) {
            if (rzz >= rat(4) && rzz <= rat(12))
                consider(finish(k, m, extr, {{db.zeta_moment(rzz), kOne}}));
            else
                failures.push_back("zeta moment needs power in [4,12], have " + to_string(rzz));
            return;
        }
        if (zz == 0) {
            if (rkd <= rat(11))
                consider(finish(k, m, extr, {{db.delta_moment(rkd), kOne}}));
            else
                failures.push_back("Delta moment needs power <= 11, have " + to_string(rkd));
            return;
        }
        if (kd == 8 && zz == 2) consider(finish(k, m, extr, {{db.mixed_eighth(), kOne}}));

        // eighth-moment split: (Delta^8 |zeta|^2)^{kd/8} * |zeta|^{zz - kd/4}
        if (kd >= 1 && kd < 8) {
            const Rational w = rat(kd, 8);
            const Rational A = (rzz - rkd / rat(4)) / (kOne - w);
            if (A >= rat(4) && A <= rat(12))
                consider(finish(k, m, extr,
                                {{db.mixed_eighth(), w}, {db.zeta_moment(A), kOne - w}}));
            else
                failures.push_back("eighth-moment split residual zeta power " + to_string(A) +
                                   " outside [4,12]");
        }
        // same split through the A0 hypothesis slot
        if (use_a0_hypothesis && db.a0_hypothesis() && kd >= 1) {
            const Rational a0 = *db.a0_hypothesis();
            const Rational w = rkd / a0;
            if (w < kOne) {
                const Rational A = (rzz - rat(2) * w) / (kOne - w);
                if (A >= rat(4) && A <= rat(12))
                    consider(finish(k, m, extr, {{db.a0_fact(), w}, {db.zeta_moment(A), kOne - w}}));
            }
        }
        // two-factor split of separate Delta and zeta moments
        for (const auto& w : grid) {
            const Rational A1 = rkd / w;
            if (A1 > rat(11)) continue;
            const Rational A2 = rzz / (kOne - w);
            if (A2 < rat(4) || A2 > rat(12)) continue;
            consider(finish(k, m, extr,
                            {{db.delta_moment(A1), w}, {db.zeta_moment(A2), kOne - w}}));
        }
    };

    const auto dpw = db.delta_pointwise();
    const auto zpw = db.zeta_pointwise();
    for (int jd = 0; jd <= k; ++jd) {
        for (int jz = 0; jz <= 2 * m; ++jz) {
            std::vector<Extraction> extr;
            if (jd > 0) extr.push_back({dpw, rat(jd)});
            if (jz > 0) extr.push_back({zpw, rat(jz)});
            residual_strategies(k - jd, 2 * m - jz, extr);
        }
    }

    if (!best) {
        std::string msg = "derive_mixed_bound: no admissible strategy for k=" + std::to_string(k) +
                          ", m=" + std::to_string(m);
        std::sort(failures.begin(), failures.end());
        failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
        for (const auto& f : failures) msg += "\n  " + f;
        throw InfeasibleError(msg);
    }
    return *best;
}

Rational trivial_bound(int k, int m, const FactDatabase& db) {
    if (k < 0 || m < 0 || (k == 0 && m == 0))
        throw std::invalid_argument("trivial_bound: need k >= 0, m >= 0, not both zero");
    const Rational theta = db.theta();
    const Rational sigma = db.zeta_pointwise().exponent;
    const Rational rk = rat(k), rm2 = rat(2LL * m);

    std::optional<Rational> bestv;
    auto consider = [&](const Rational& v) {
        if (!bestv || v < *bestv) bestv = v;
    };
    // (i) pull Delta^k out pointwise, integrate the zeta moment
    if (rm2 >= rat(4) && rm2 <= rat(12)) consider(rk * theta + zeta_moment_exponent(rm2));
    if (m == 0) consider(rk * theta + kOne);
    // (ii) pull |zeta|^{2m} out pointwise, integrate the Delta moment
    if (rk <= rat(11)) consider(rm2 * sigma + kOne + m_of_A(rk, theta));
    // (iii) pull both out, integrate 1
    consider(rk * theta + rm2 * sigma + kOne);
    return *bestv;
}

Rational conjectural_exponent(int k, int m) {
    if (k < 0 || m < 0 || (k == 0 && m == 0))
        throw std::invalid_argument("conjectural_exponent: need k >= 0, m >= 0, not both zero");
    return kOne + rat(k) / rat(4);
}

namespace {

std::string fact_growth_text(const MomentFact& f) {
    std::string s = "T^" + (denominator(f.growth) == 1 ? to_string(f.growth)
                                                       : "{" + to_string(f.growth) + "}");
    if (!f.log_power)
        s += " log^C T";
    else if (*f.log_power != kZero)
        s += " log^" + to_string(*f.log_power) + " T";
    if (f.has_epsilon) s += " T^eps";
    return s;
}

std::string monomial_text(const std::map<Atom, Rational>& powers) {
    std::string s;
    for (const auto& [atom, p] : powers) {
        if (!s.empty()) s += " ";
        s += atom_name(atom);
        if (p != Rational(1))
            s += denominator(p) == 1 ? "^" + to_string(p) : "^{" + to_string(p) + "}";
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string render_derivation(const Derivation& d) {
    std::ostringstream os;
    os << "int_0^T |Delta|^" << d.k << " |zeta|^" << 2 * d.m << " dt\n";
    for (const auto& e : d.extractions)
        os << "  pointwise: " << atom_name(e.fact.atom) << "^" << to_string(e.power) << " << T^{"
           << to_string(e.power * e.fact.exponent) << "+eps}   -- " << e.fact.label << "\n";
    if (!d.steps.empty()) {
        std::string ws;
        for (const auto& s : d.steps) ws += (ws.empty() ? "" : ", ") + to_string(s.weight);
        os << "  Hoelder weights " << ws << ":\n";
        for (const auto& s : d.steps)
            os << "    [w=" << to_string(s.weight) << "] int " << monomial_text(s.fact.powers)
               << " << " << fact_growth_text(s.fact) << "   -- " << s.fact.label << "\n";
    }
    os << "  => << " << fact_growth_text(d.result) << "  (" << to_string(d.result.growth) << " = "
       << to_decimal_string(d.result.growth, 10) << ")";
    if (d.conditional && d.result.condition) os << "\n  CONDITIONAL: " << *d.result.condition;
    os << "\n";
    return os.str();
}

std::string derivation_to_json(const Derivation& d) {
    std::ostringstream os;
    os << "{\"k\":" << d.k << ",\"m\":" << d.m << ",\"growth\":\"" << to_string(d.result.growth)
       << "\",\"growth_decimal\":" << to_decimal_string(d.result.growth, 10) << ",\"log_power\":";
    if (d.result.log_power)
        os << "\"" << to_string(*d.result.log_power) << "\"";
    else
        os << "\"C\"";
    os << ",\"has_epsilon\":" << (d.result.has_epsilon ? "true" : "false")
       << ",\"conditional\":" << (d.conditional ? "true" : "false") << ",\"extractions\":[";
    for (std::size_t i = 0; i < d.extractions.size(); ++i) {
        const auto& e = d.extractions[i];
        os << (i ? "," : "") << "{\"atom\":\"" << atom_name(e.fact.atom) << "\",\"power\":\""
           << to_string(e.power) << "\",\"exponent\":\"" << to_string(e.fact.exponent) << "\"}";
    }
    os << "],\"steps\":[";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& s = d.steps[i];
        os << (i ? "," : "") << "{\"weight\":\"" << to_string(s.weight) << "\",\"growth\":\""
           << to_string(s.fact.growth) << "\",\"label\":\"" << s.fact.label << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace zetalab
