#include "motdt/sampling.hpp"

namespace motdt::sampling {

MonodromicMotive random_motive(Rng& rng, int max_terms, long max_den, long max_coeff) {
  std::vector<MonodromicMotive::Term> terms;
  int n = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < n; ++i) {
    long den = rng.range(1, max_den);
    long num = rng.range(-2 * den, 2 * den);
    long c = rng.range(-max_coeff, max_coeff);
    terms.push_back({make_rational(num, den), Integer(c)});
  }
  return MonodromicMotive::from_terms(std::move(terms));
}

TateUnit random_unit(Rng& rng) {
  TateUnit u;
  int n = static_cast<int>(rng.range(0, 2));
  for (int i = 0; i < n; ++i) u.factors[rng.range(1, 3)] += 1;
  return u;
}

MotiveFraction random_fraction(Rng& rng) {
  MonodromicMotive m = random_motive(rng);
  return MotiveFraction(std::move(m), random_unit(rng));
}

Series random_f1_series(Rng& rng, int arity, int order) {
  Series s(arity, order);
  int n = static_cast<int>(rng.range(1, 4));
  for (int i = 0; i < n; ++i) {
    DegreeVector v(arity, 0);
    int total = static_cast<int>(rng.range(1, order));
    for (int k = 0; k < total; ++k) v[rng.range(0, arity - 1)] += 1;
    MonodromicMotive m = random_motive(rng, 2, 6, 3);
    TateUnit u;
    if (rng.range(0, 2) == 0) u.factors[rng.range(1, 2)] = 1;
    s.add(v, MotiveFraction(std::move(m), u));
  }
  return s;
}

ProductForm random_product_form(Rng& rng) {
  ProductForm p;
  int n = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < n; ++i) {
    long a = rng.range(0, 3);
    long b = rng.range(1, 3);
    p.factors.push_back({a, b});
  }
  MonodromicMotive m = random_motive(rng, 2, 4, 3);
  if (m.is_zero()) m = MonodromicMotive(1);
  TateUnit u;
  if (rng.range(0, 3) == 0) u.factors[1] = 1;
  p.g = MotiveFraction(std::move(m), u);
  return p;
}

Series geometric_zero(const MotiveFraction& g, const Factors& factors, int order) {
  Series acc = Series::monomial(1, order, {0}, g);
  for (const auto& [a, b] : factors) {
    Series f(1, order);
    for (long k = 1; b * k <= order; ++k) f.set({static_cast<int>(b * k)}, MotiveFraction(MonodromicMotive::monomial(Rational(-a * k))));
    acc = mul(acc, f);
  }
  return acc;
}

// x/(1 - x) = -sum_{k >= 0} x^(-k)
Series geometric_infinity(const MotiveFraction& g, const Factors& factors, int order) {
  Series acc = Series::monomial(1, order, {0}, g);
  for (const auto& [a, b] : factors) {
    Series f(1, order);
    for (long k = 0; b * k <= order; ++k)
      f.set({static_cast<int>(b * k)}, MotiveFraction(MonodromicMotive::monomial(Rational(a * k), -1)));
    acc = mul(acc, f);
  }
  return acc;
}

}  // namespace motdt::sampling
