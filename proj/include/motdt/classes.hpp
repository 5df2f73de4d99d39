#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motdt/fraction.hpp"

namespace motdt {

// Realization conventions: L = q, L^(1/2) = 1 - [mu_2] = -q^(1/2),
// [mu_d] = 1 + q^(1/d) + ... + q^((d-1)/d). Every monomial q^a is a
// line element; chi is evaluation at q = 1.

// [mu_d]
MonodromicMotive make_mu(long d);
// L^(m/2) = (-q^(1/2))^m
MonodromicMotive make_tate(long m);
// q^a with coefficient 1
MonodromicMotive monomial(const Rational& a);
// L - 1
MonodromicMotive lefschetz_minus_one();

MonodromicMotive gl_class(long n);
MonodromicMotive q_integer(long n);
MonodromicMotive q_factorial(long n);

Integer euler_char(const MonodromicMotive& x);
// euler-undefined when the denominator does not divide out.
Integer euler_char(const MotiveFraction& x);

// c * L^(m/2) * (1 - [mu_d])
struct MuTerm {
  Integer coeff;
  long half_power = 0;
  long d = 2;
  bool operator==(const MuTerm&) const = default;
};

struct MuBasis {
  std::vector<MuTerm> terms;
  MonodromicMotive remainder;
};

MonodromicMotive expand(const MuTerm& t);
MonodromicMotive expand(const MuBasis& b);

// Greedy rewriting, highest exponent denominators first.
MuBasis to_mu_basis(const MonodromicMotive& x);

// Plain text "L^{-1/2}(1-[mu_3])". With a hint d, x = L^(m/2)(1-[mu_d])
// is recognized directly, which matters for d = 2 where the block
// collapses to a pure power of q.
std::string render_mu_basis(const MonodromicMotive& x, std::optional<long> hint_d = std::nullopt);
std::string render_mu_basis_latex(const MonodromicMotive& x, std::optional<long> hint_d = std::nullopt);

}  // namespace motdt
