// format.hpp — deterministic, locale-independent number rendering for the
// CLI surfaces: fixed notation inside [1e-3, 1e4), scientific with a
// normalized exponent ("1.59535e-9") outside.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace decaylab {

namespace detail {

inline std::string to_chars_str(double v, std::chars_format fmt, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, fmt, precision);
    return std::string(buf, res.ptr);
}

// "1.595350e-09" -> "1.59535e-9"; also strips "+" and trailing zero fractions
// are kept as written by to_chars (fixed precision).
inline std::string normalize_exponent(std::string s) {
    const auto e = s.find('e');
    if (e == std::string::npos) return s;
    std::string mant = s.substr(0, e);
    const int exp_val = std::atoi(s.c_str() + e + 1);
    return mant + "e" + std::to_string(exp_val);
}

}  // namespace detail

inline std::string format_number(double v, int significant_digits = 9) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double mag = std::abs(v);
    if (mag >= 1e-3 && mag < 1e4) {
        const int int_digits = static_cast<int>(std::floor(std::log10(mag))) + 1;
        const int decimals = std::max(significant_digits - std::max(int_digits, 1), 0);
        return detail::to_chars_str(v, std::chars_format::fixed, decimals);
    }
    return detail::normalize_exponent(
        detail::to_chars_str(v, std::chars_format::scientific, significant_digits - 1));
}

}  // namespace decaylab
