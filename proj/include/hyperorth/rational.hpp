#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperorth {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Zero denominators and stray characters throw ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q" (integers render as "p/1").
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` significant digits, computed in extended precision.
std::string to_decimal(const Rational& value, int digits);

double to_double(const Rational& value);

/// Least common multiple of the denominators.
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer d = 1;
  for (const Rational& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

}  // namespace hyperorth
