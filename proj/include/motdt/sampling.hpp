#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "motdt/series.hpp"

namespace motdt::sampling {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Integer in [lo, hi]; plain modulo keeps it reproducible across standard libraries.
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 gen_;
};

// Up to max_terms monomials c q^(a/b), b <= max_den, |a/b| <= 2, |c| <= max_coeff.
MonodromicMotive random_motive(Rng& rng, int max_terms = 4, long max_den = 12, long max_coeff = 9);
// Zero to two factors from q - 1, q^2 - 1, q^3 - 1.
TateUnit random_unit(Rng& rng);
MotiveFraction random_fraction(Rng& rng);
// One to four terms of total degree 1..order, sometimes over q - 1 or q^2 - 1.
Series random_f1_series(Rng& rng, int arity, int order);

using Factors = std::vector<std::pair<long, long>>;  // (a, b) for q^(-a) T^b

struct ProductForm {
  MotiveFraction g;
  Factors factors;
};

ProductForm random_product_form(Rng& rng);

// Expansions of g prod x/(1 - x), x = q^(-a) T^b, by multiplying geometric
// series: at T = 0 in T, and at T = infinity in S = 1/T.
Series geometric_zero(const MotiveFraction& g, const Factors& factors, int order);
Series geometric_infinity(const MotiveFraction& g, const Factors& factors, int order);

}  // namespace motdt::sampling
