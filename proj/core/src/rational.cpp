#include "zetalab/rational.hpp"

#include <cctype>

namespace zetalab {

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
        return Rational(BigInt(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num)), d);
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string to_decimal_string(const Rational& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;

    // scale: smallest k with den | 10^k, capped at `digits`
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    const bool terminating = (d == 1);
    int k = terminating ? std::max(twos, fives) : digits;

    BigInt pow10 = 1;
    for (int i = 0; i < k; ++i) pow10 *= 10;
    // round half away from zero
    BigInt scaled = (num * pow10 * 2 + den) / (den * 2);
    BigInt whole = scaled / pow10;
    BigInt frac = scaled % pow10;

    std::string out = (neg ? "-" : "") + whole.str();
    if (k > 0) {
        std::string f = frac.str();
        f.insert(f.begin(), k - static_cast<int>(f.size()), '0');
        if (!terminating) {
            // keep the full rounded tail
        } else {
            while (!f.empty() && f.back() == '0') f.pop_back();
        }
        if (!f.empty()) out += "." + f;
    }
    return out;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace zetalab
