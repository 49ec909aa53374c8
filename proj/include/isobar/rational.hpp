#ifndef ISOBAR_RATIONAL_HPP
#define ISOBAR_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace isobar
{

// Exact rational in lowest terms with positive denominator. GMP keeps the
// canonical form after every arithmetic operation; values built from
// numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer &num, const Integer &den);

// Accepts "p" or "p/q" with optional leading sign on p; q must be a positive
// integer. No decimal points, exponents or whitespace inside the literal.
Rational parse_rational(std::string_view text);

// "3/8", "-2", "0".
std::string to_string(const Rational &value);

bool is_integer(const Rational &value);

Integer factorial(int n);
Integer binomial(int n, int k); // zero when k < 0, k > n or n < 0

} // namespace isobar

#endif
