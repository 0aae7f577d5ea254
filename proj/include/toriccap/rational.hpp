#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toriccap {

// Arbitrary-precision integers and rationals. mpq_class keeps values in lowest
// terms with a positive denominator as long as every construction goes through
// make_rational() or canonical arithmetic.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "n", "-n", "p/q" (q != 0). Whitespace is not allowed.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or plain "n" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer ceil_div(const Integer& num, const Integer& den);
Integer floor_div(const Integer& num, const Integer& den);

// Smallest integer >= value.
Integer ceil(const Rational& value);

}  // namespace toriccap
