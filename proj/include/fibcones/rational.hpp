#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fibcones {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Renders as "n" when integral, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Accepts "n", "-n" and "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

}  // namespace fibcones
