#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string_view>

namespace zetalab {

using Real50 = boost::multiprecision::cpp_bin_float_50;

// 40 significant digits; the string forms are the reference values the
// high-precision constants are parsed from (and tested against).
inline constexpr std::string_view kEulerGammaStr = "0.5772156649015328606065120900824024310422";
inline constexpr std::string_view kPiStr = "3.141592653589793238462643383279502884197";

inline const Real50& euler_gamma50() {
    static const Real50 g{std::string(kEulerGammaStr)};
    return g;
}

inline const Real50& pi50() {
    static const Real50 p{std::string(kPiStr)};
    return p;
}

inline constexpr double kEulerGamma = 0.5772156649015328606;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr long double kEulerGammaL = 0.57721566490153286060651209008240243104L;
inline constexpr long double kPiL = 3.14159265358979323846264338327950288420L;

}  // namespace zetalab
