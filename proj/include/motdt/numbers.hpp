#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace motdt {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer floor_of(const Rational& x);

// Representative of x modulo n in [0, n).
Rational mod_of(const Rational& x, const Integer& n);

// C(a, k) for any integer a, as the polynomial a(a-1)...(a-k+1)/k!.
Integer binomial(const Integer& a, unsigned long k);

// Fits-or-throws conversion for small loop bounds and exponents.
long to_long(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace motdt
