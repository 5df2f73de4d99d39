#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "motdt/series.hpp"

namespace motdt {

constexpr int kMaxProgressionDegree = 8;

// sum over m in Z of F(m) q^(-a m) T^(b m + r), 0 <= r < b, with
// F(m) = sum_l coeffs[l] * C(m + l, l).
struct ProgressionSummand {
  long a = 0;
  long b = 1;
  long r = 0;
  std::vector<MotiveFraction> coeffs;

  MotiveFraction value_at(long m) const;  // F(m)
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Builds F in the binomial basis from F(0), ..., F(D).
std::vector<MotiveFraction> interpolate_binomial(const std::vector<MotiveFraction>& values);

// Two-sided expansion tau = g_0 - g_inf of a rational function in the
// span of L^(-a)T^b / (1 - L^(-a)T^b) products.
class RationalProgression {
 public:
  RationalProgression() = default;
  // Merges summands with equal (a, b, r) after moving r into [0, b).
  static RationalProgression from_summands(std::vector<ProgressionSummand> summands);
  // Coefficient sequence identically 1: the unit of the coefficientwise product.
  static RationalProgression unit();

  const std::vector<ProgressionSummand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  // Coefficient of T^k in tau.
  MotiveFraction coefficient(long k) const;
  long period() const;
  // Same function with every summand rewritten over the period B.
  RationalProgression refined(long period) const;

  RationalProgression& operator+=(const RationalProgression& o);
  friend RationalProgression operator+(RationalProgression a, const RationalProgression& b) { return a += b; }
  friend RationalProgression operator-(RationalProgression a, const RationalProgression& b) { return a += b.scaled(-1); }
  RationalProgression scaled(const MotiveFraction& c) const;
  // Equal as functions: compared over a common period.
  friend bool operator==(const RationalProgression& x, const RationalProgression& y);
  friend bool operator!=(const RationalProgression& x, const RationalProgression& y) { return !(x == y); }

  std::string to_string() const;

 private:
  std::vector<ProgressionSummand> summands_;
};

// g * prod_i L^(-a_i) T^(b_i) / (1 - L^(-a_i) T^(b_i)) by partial fractions.
RationalProgression from_product_form(const MotiveFraction& g, const std::vector<std::pair<long, long>>& factors);

// Coefficientwise (Hadamard) product: the ring structure of TR[[T]].
// Pairs of summands whose supports are disjoint contribute nothing.
RationalProgression mul(const RationalProgression& x, const RationalProgression& y);
RationalProgression sigma_n(const RationalProgression& x, int n);

// Coefficients of T^1..T^N of the expansion at 0.
Series expand_zero(const RationalProgression& x, int order);
// Coefficients of S^0..S^N, S = 1/T, of the expansion at infinity.
Series expand_infinity(const RationalProgression& x, int order);
MotiveFraction eval_infinity(const RationalProgression& x);

inline std::ostream& operator<<(std::ostream& os, const RationalProgression& x) { return os << x.to_string(); }

}  // namespace motdt
