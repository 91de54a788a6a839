#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mtile {

using Integer = mpz_class;
// gmpxx keeps mpq_class canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, q != 0).
Rational parse_rational(std::string_view text);

/// num/den in lowest terms (den != 0).
Rational ratio(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // >= 0
  Integer x;
  Integer y;  // a*x + b*y == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace mtile
