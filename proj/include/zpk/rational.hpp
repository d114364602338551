#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zpk {

// All counts and probabilities are exact. Counts grow like n^k and multiply
// across direct products, so everything is arbitrary precision; rationals are
// kept normalized (gcd 1, positive denominator) by cpp_rational itself.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for integer exponents >= 0, with 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned exp);

/// Binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

bool is_prime(long long n);

/// Normalized "p/q" rendering, denominator always present ("1/1", "3/4").
std::string to_fraction_string(const Rational& r);

/// Decimal rendering for display only: `digits` significant digits from
/// exact long division, truncated, never used in comparisons.
std::string to_decimal_string(const Rational& r, int digits = 20);

} // namespace zpk
