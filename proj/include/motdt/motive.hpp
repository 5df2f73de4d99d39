#pragma once

#include <ostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motdt/numbers.hpp"

namespace motdt {

// Finite integer combination of symbols q^a with a rational.
// Terms are kept sorted by exponent, without zero coefficients.
class MonodromicMotive {
 public:
  struct Term {
    Rational exponent;
    Integer coeff;
    bool operator==(const Term& o) const { return exponent == o.exponent && coeff == o.coeff; }
  };

  MonodromicMotive() = default;
  MonodromicMotive(long c);  // NOLINT: constants convert implicitly
  MonodromicMotive(const Integer& c);  // NOLINT

  static MonodromicMotive monomial(const Rational& exponent, const Integer& coeff = 1);
  // Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static MonodromicMotive from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral_exponents() const;
  Integer coeff(const Rational& exponent) const;
  const Rational& min_exponent() const;
  const Rational& max_exponent() const;

  MonodromicMotive& operator+=(const MonodromicMotive& o);
  MonodromicMotive& operator-=(const MonodromicMotive& o);
  MonodromicMotive& operator*=(const MonodromicMotive& o);
  MonodromicMotive operator-() const;

  friend MonodromicMotive operator+(MonodromicMotive a, const MonodromicMotive& b) { return a += b; }
  friend MonodromicMotive operator-(MonodromicMotive a, const MonodromicMotive& b) { return a -= b; }
  friend MonodromicMotive operator*(const MonodromicMotive& a, const MonodromicMotive& b);
  friend bool operator==(const MonodromicMotive& a, const MonodromicMotive& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MonodromicMotive& a, const MonodromicMotive& b) { return !(a == b); }

  MonodromicMotive pow(unsigned long n) const;
  MonodromicMotive scaled(const Integer& c) const;
  // Multiplication by q^e.
  MonodromicMotive shifted(const Rational& e) const;
  // Substitution q -> q^k (the Adams-type operation psi^k of the realization).
  MonodromicMotive substitute(const Rational& k) const;
  // Evaluation at q = 1.
  Integer value_at_one() const;

  // Exact quotient by q^n - 1, if it exists.
  std::optional<MonodromicMotive> divide_cyclotomic(long n) const;

  // Canonical text form: "q^(-1/2) + 2*q - 3", terms by ascending exponent.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// q^n - 1
MonodromicMotive cyclotomic_factor(long n);

std::string render_monomial(const Rational& exponent);

inline std::ostream& operator<<(std::ostream& os, const MonodromicMotive& x) { return os << x.to_string(); }

}  // namespace motdt
