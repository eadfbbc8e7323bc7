#pragma once

// Exact scalars for the moment engine: arbitrary-precision integers and
// signed rationals kept in canonical form (gcd(|num|, den) = 1, den >= 1).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rwa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p" or "p/q" with optional sign and surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw std::invalid_argument("parse_rational: empty input");
    const std::string trimmed{text.substr(first, last - first + 1)};

    const auto slash = trimmed.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(trimmed));
        BigInt num(trimmed.substr(0, slash));
        BigInt den(trimmed.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {  // keep the sign on the numerator
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + trimmed + "'");
    }
}

}  // namespace rwa
