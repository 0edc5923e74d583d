#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torcov {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// r^e for any integer e; 0^e with e < 0 throws.
Rational rpow(const Rational& r, int e);
Rational rpow(long base, int e);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace torcov
