#pragma once

#include <map>
#include <string>
#include <vector>

#include "motdt/fraction.hpp"

namespace motdt {

using Partition = std::vector<int>;
using SigmaVector = std::vector<MotiveFraction>;

// Partitions of n, parts non-increasing, in decreasing lexicographic order:
// (3), (2,1), (1,1,1).
std::vector<Partition> partitions(int n);

inline bool ring_is_zero(const Integer& x) { return x == 0; }
inline bool ring_is_zero(const MonodromicMotive& x) { return x.is_zero(); }
inline bool ring_is_zero(const MotiveFraction& x) { return x.is_zero(); }

// det(h[lam_i - i + j]) with h[0] = 1 and h[<0] = 0. Expansion row by row
// over the reachable sets of used columns; zero entries are skipped.
template <class Ring>
Ring jacobi_trudi(const Partition& lam, const std::vector<Ring>& h) {
  const int len = static_cast<int>(lam.size());
  if (len == 0) return Ring(1);
  std::map<unsigned, Ring> layer{{0u, Ring(1)}};
  for (int i = 0; i < len; ++i) {
    std::map<unsigned, Ring> next;
    for (const auto& [mask, value] : layer) {
      int above = 0;  // used columns greater than j, counted downwards
      for (int j = len - 1; j >= 0; --j) {
        if (mask & (1u << j)) {
          ++above;
          continue;
        }
        int idx = lam[i] - i + j;
        if (idx < 0) continue;
        if (idx >= static_cast<int>(h.size()) || ring_is_zero(h[idx])) continue;
        Ring term = value * h[idx];
        if (above % 2 == 1) term = -term;
        auto it = next.find(mask | (1u << j));
        if (it == next.end()) next.emplace(mask | (1u << j), std::move(term));
        else it->second += term;
      }
    }
    layer = std::move(next);
    if (layer.empty()) return Ring();
  }
  return layer.begin()->second;
}

// Integer polynomial in X_1..X_16, Y_1..Y_16.
class FormalPolynomial {
 public:
  static constexpr int kMaxIndex = 16;
  // Exponent slots: X_i at i-1, Y_i at kMaxIndex + i - 1; trailing zeros trimmed.
  using Monomial = std::vector<int>;

  FormalPolynomial() = default;
  FormalPolynomial(long c);  // NOLINT
  static FormalPolynomial variable(bool y, int index);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalPolynomial& operator+=(const FormalPolynomial& o);
  FormalPolynomial operator-() const;
  friend FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b) { return a += b; }
  friend FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b) { return a += -b; }
  friend FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b);
  friend bool operator==(const FormalPolynomial& a, const FormalPolynomial& b) = default;

  // Stable order: decreasing lexicographic on the exponent slots.
  std::string to_string() const;

  // x[i], y[i] are the values of X_i, Y_i (index 0 unused).
  template <class Ring>
  Ring evaluate(const std::vector<Ring>& x, const std::vector<Ring>& y) const {
    Ring total;
    for (const auto& [mono, c] : terms_) {
      Ring t(c);
      for (int s = 0; s < static_cast<int>(mono.size()); ++s) {
        const Ring& v = s < kMaxIndex ? x[s + 1] : y[s - kMaxIndex + 1];
        for (int e = 0; e < mono[s]; ++e) t = t * v;
      }
      total += t;
    }
    return total;
  }

 private:
  std::map<Monomial, Integer> terms_;
};

inline bool ring_is_zero(const FormalPolynomial& x) { return x.is_zero(); }

// Sum over partitions lam of n of s_lam(X) s_lam(Y). Memoized.
const FormalPolynomial& universal_p(int n);

// P^n evaluated at sigma vectors x = (1, x_1, ..., x_n), y likewise.
template <class Ring>
Ring apply_universal_p(int n, const std::vector<Ring>& x, const std::vector<Ring>& y) {
  Ring total;
  for (const auto& lam : partitions(n)) {
    Ring a = jacobi_trudi(lam, x);
    if (ring_is_zero(a)) continue;
    Ring b = jacobi_trudi(lam, y);
    if (ring_is_zero(b)) continue;
    total += a * b;
  }
  return total;
}

MonodromicMotive sigma_poly(const MonodromicMotive& x, int n);
std::vector<MonodromicMotive> sigma_poly_vector(const MonodromicMotive& x, int max_n);

// sigma^n((q^k - 1)^-1)
MotiveFraction sigma_unit_inverse(long k, int n);
// sigma^0..sigma^max_n of 1/f for f a product of cyclotomic factors.
SigmaVector sigma_unit_inverse_vector(const TateUnit& f, int max_n);

MotiveFraction sigma_fraction(const MotiveFraction& x, int n);
SigmaVector sigma_vector(const MotiveFraction& x, int max_n);
// Same values through P^n(sigma(numerator), sigma(1/denominator)).
SigmaVector sigma_vector_universal(const MotiveFraction& x, int max_n);

Integer sigma_int(const Integer& a, int n);

// Coefficient of t^n in sigma_x(-t)^-1.
MotiveFraction opposite_lambda(const MotiveFraction& x, int n);

}  // namespace motdt
