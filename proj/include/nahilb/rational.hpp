#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nahilb {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q"; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational rational_pow(const Rational& base, int exponent);
Integer binomial(long n, long k);

}  // namespace nahilb
