#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace k3 {

// Arbitrary-precision integers and rationals. gmpxx keeps mpq_class results in
// lowest terms with a positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// "3", "-1/2". Always lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts an optionally signed integer, optionally followed by '/' and a
// positive integer. Surrounding whitespace is not allowed here.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace k3
