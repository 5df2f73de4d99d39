#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "motdt/numbers.hpp"

namespace motdt {

// Dense polynomial in t over Q; coeffs[i] is the coefficient of t^i and
// the leading coefficient is nonzero (the zero polynomial is empty).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly t();

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator()(const Rational& x) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly scaled(const Rational& c) const;
  QPoly pow(unsigned long k) const;
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  QPoly derivative() const;
  QPoly monic() const;
  // Primitive integer multiple with positive leading coefficient.
  QPoly primitive() const;

  // "t^3 - t", "t - 1/2", "1/4*t^4 - 1/2*t^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Throws division-error for a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

// Yun's algorithm: monic squarefree parts with their multiplicities, for
// a nonconstant polynomial. Parts of degree zero are omitted.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

// Grammar: integers, the variable t, + - * / ^, parentheses. Division is
// by nonzero constants only, exponents are integer literals and implicit
// multiplication is rejected. Throws syntax-error with a 1-based column.
QPoly parse_polynomial(const std::string& text);

struct Factorization {
  std::vector<QPoly> factors;  // monic
  bool complete = true;        // false when the search budget ran out
};

// Irreducible monic factors over Q of a squarefree polynomial, by
// Kronecker's method. A factor left unsplit when the budget is exhausted
// is reported as is with complete = false.
Factorization factor_squarefree(const QPoly& f, long budget = 200000);

inline std::ostream& operator<<(std::ostream& os, const QPoly& x) { return os << x.to_string(); }

}  // namespace motdt
