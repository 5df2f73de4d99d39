#pragma once

#include <ostream>
#include <map>
#include <string>
#include <vector>

#include "motdt/fraction.hpp"

namespace motdt {

using DegreeVector = std::vector<int>;

int total_degree(const DegreeVector& v);

// All degree vectors of the given arity with total degree exactly n,
// in lexicographically decreasing order.
std::vector<DegreeVector> degree_vectors(int arity, int n);

// Truncated power series in T_1..T_r over MotiveFraction; coefficients of
// total degree above the order are never stored.
class Series {
 public:
  Series(int arity, int order);
  static Series one(int arity, int order);
  static Series monomial(int arity, int order, const DegreeVector& v, const MotiveFraction& c);

  int arity() const { return arity_; }
  int order() const { return order_; }
  const std::map<DegreeVector, MotiveFraction>& coeffs() const { return coeffs_; }
  MotiveFraction coeff(const DegreeVector& v) const;
  MotiveFraction constant_term() const;
  bool in_f1() const { return constant_term().is_zero(); }

  // Coefficients beyond the order are dropped.
  void set(const DegreeVector& v, const MotiveFraction& c);
  void add(const DegreeVector& v, const MotiveFraction& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  Series truncated(int order) const;
  std::string to_string() const;

 private:
  void check(const DegreeVector& v) const;

  int arity_;
  int order_;
  std::map<DegreeVector, MotiveFraction> coeffs_;
};

Series sym(const Series& a);
Series plog(const Series& b);
Series tate_scale(const Series& a, int axis, long m);
Series mul(const Series& a, const Series& b);
Series ratio(const Series& a, const Series& b);
// Phi with Phi_0 = 1 and Phi(L T) = Phi(T) S(T).
Series solve_twist_equation(const Series& s);
Series collapse(const Series& a);
// A univariate series placed on one axis of an arity-r series.
Series on_axis(const Series& a, int arity, int axis);

inline std::ostream& operator<<(std::ostream& os, const Series& x) { return os << x.to_string(); }

}  // namespace motdt
