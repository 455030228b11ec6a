#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vortex {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign. Anything else, floats
// included, raises ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

// "3", "-1/2": the shortest exact form, used in human-readable output.
std::string to_short_string(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
Rational power(const Rational& q, unsigned long e);

}  // namespace vortex
