#include <gtest/gtest.h>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"
#include "motdt/lambda.hpp"
#include "motdt/progression.hpp"
#include "test_support.hpp"

using namespace motdt;
using motdt::testing::Rng;
using motdt::testing::Factors;
using motdt::testing::brute_infinity;
using motdt::testing::brute_zero;

namespace {

MonodromicMotive q(long num, long den = 1, long c = 1) { return MonodromicMotive::monomial(make_rational(num, den), c); }

Series hadamard(const Series& x, const Series& y) {
  Series z(1, std::min(x.order(), y.order()));
  for (const auto& [v, c] : x.coeffs()) z.set(v, c * y.coeff(v));
  return z;
}

Factors random_factors(Rng& rng) {
  Factors f;
  int n = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < n; ++i) f.push_back({rng.range(0, 3), rng.range(1, 3)});
  return f;
}

MotiveFraction random_g(Rng& rng) {
  auto m = motdt::testing::random_motive(rng, 2, 4, 3);
  if (m.is_zero()) m = MonodromicMotive(1);
  TateUnit u;
  if (rng.range(0, 3) == 0) u.factors[1] = 1;
  return MotiveFraction(m, u);
}

}  // namespace

TEST(Interpolation, BinomialBasis) {
  // F(m) = m^2 sampled at 0..2
  auto c = interpolate_binomial({0, 1, 4});
  ProgressionSummand s{0, 1, 0, c};
  for (long m = -5; m <= 5; ++m) EXPECT_EQ(s.value_at(m), MotiveFraction(Integer(m * m)));
  EXPECT_EQ(interpolate_binomial({3, 3, 3}).size(), 1u);
}

TEST(ProductForm, SingleFactors) {
  auto x = from_product_form(1, {{0, 1}});
  ASSERT_EQ(x.summands().size(), 1u);
  EXPECT_EQ(x.summands()[0].a, 0);
  EXPECT_EQ(x.summands()[0].b, 1);
  EXPECT_EQ(x.coefficient(1), MotiveFraction(1));
  EXPECT_EQ(x.coefficient(-3), MotiveFraction(1));
  auto y = from_product_form(1, {{1, 1}});
  EXPECT_EQ(y.summands()[0].a, 1);
  EXPECT_EQ(y.coefficient(2), MotiveFraction(q(-2)));
}

TEST(ProductForm, DoublePole) {
  auto x = from_product_form(1, {{0, 1}, {0, 1}});
  auto z = expand_zero(x, 8);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(z.coeff({k}), MotiveFraction(Integer(k - 1))) << k;
  ASSERT_EQ(x.summands().size(), 1u);
  EXPECT_EQ(x.summands()[0].degree(), 1);
}

TEST(ProductForm, RoundTripOnRandomForms) {
  Rng rng(1234);
  for (int i = 0; i < 50; ++i) {
    auto f = random_factors(rng);
    auto g = random_g(rng);
    auto x = from_product_form(g, f);
    EXPECT_EQ(expand_zero(x, 12), brute_zero(g, f, 12)) << i;
    EXPECT_EQ(expand_infinity(x, 12), brute_infinity(g, f, 12)) << i;
  }
}

TEST(Infinity, Examples) {
  auto x = from_product_form(1, {{0, 1}});
  auto inf = expand_infinity(x, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(inf.coeff({k}), MotiveFraction(-1));
  EXPECT_EQ(eval_infinity(x), MotiveFraction(-1));
  EXPECT_EQ(eval_infinity(from_product_form(1, {{1, 1}})), MotiveFraction(-1));
  for (long m = 1; m <= 6; ++m)
    for (long nu = 1; nu <= 5; ++nu) EXPECT_EQ(eval_infinity(from_product_form(1, {{nu, m}})), MotiveFraction(-1));
}

TEST(Hadamard, Examples) {
  auto x = from_product_form(1, {{0, 1}});
  EXPECT_TRUE(mul(x, RationalProgression()).is_zero());
  EXPECT_EQ(mul(x, RationalProgression::unit()), x);
  auto a = from_product_form(MotiveFraction(q(1, 2)), {{1, 2}});
  auto b = from_product_form(MotiveFraction(q(1) - q(0)), {{2, 3}});
  auto ab = mul(a, b);
  EXPECT_EQ(expand_zero(ab, 12), hadamard(expand_zero(a, 12), expand_zero(b, 12)));
  EXPECT_EQ(ab.summands().front().b, 6);
  // supports 2m+1 and 2n never meet
  auto odd = RationalProgression::from_summands({{0, 2, 1, {1}}});
  auto even = RationalProgression::from_summands({{0, 2, 0, {1}}});
  EXPECT_TRUE(mul(odd, even).is_zero());
}

TEST(Hadamard, AgreesWithExpansionsAtBothEnds) {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    auto x = from_product_form(random_g(rng), random_factors(rng));
    auto y = from_product_form(random_g(rng), random_factors(rng));
    auto xy = mul(x, y);
    EXPECT_EQ(expand_zero(xy, 12), hadamard(expand_zero(x, 12), expand_zero(y, 12)));
    Series neg = hadamard(expand_infinity(x, 12), expand_infinity(y, 12));
    Series expected(1, 12);
    for (const auto& [v, c] : neg.coeffs()) expected.set(v, -c);
    EXPECT_EQ(expand_infinity(xy, 12), expected);
    EXPECT_EQ(-eval_infinity(xy), (-eval_infinity(x)) * (-eval_infinity(y)));
  }
}

TEST(Equality, ComparesOverCommonPeriod) {
  auto x = from_product_form(1, {{0, 1}});
  auto split = RationalProgression::from_summands({{0, 2, 0, {1}}, {0, 2, 1, {1}}});
  EXPECT_EQ(x, split);
  EXPECT_NE(x, from_product_form(1, {{0, 2}}));
}

TEST(SigmaN, Examples) {
  EXPECT_TRUE(sigma_n(RationalProgression(), 2).is_zero());
  EXPECT_EQ(sigma_n(RationalProgression(), 0), RationalProgression::unit());
  auto x = from_product_form(1, {{0, 1}});
  EXPECT_EQ(sigma_n(x, 2), x);
  auto g = MotiveFraction(MonodromicMotive(1) - make_mu(2));
  EXPECT_TRUE(sigma_n(from_product_form(g, {{0, 1}}), 2).is_zero());
}

TEST(SigmaN, CoefficientwiseOnRandomForms) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    auto x = from_product_form(random_g(rng), random_factors(rng));
    if (rng.range(0, 1) == 1) x += from_product_form(random_g(rng), random_factors(rng));
    auto z = expand_zero(x, 12);
    auto inf = expand_infinity(x, 12);
    for (int n = 0; n <= 3; ++n) {
      auto s = sigma_n(x, n);
      auto sz = expand_zero(s, 12);
      auto si = expand_infinity(s, 12);
      for (int k = 1; k <= 12; ++k) EXPECT_EQ(sz.coeff({k}), sigma_fraction(z.coeff({k}), n)) << i << " " << n;
      for (int k = 0; k <= 12; ++k) EXPECT_EQ(si.coeff({k}), -sigma_fraction(-inf.coeff({k}), n)) << i << " " << n;
      EXPECT_EQ(-eval_infinity(s), sigma_fraction(-eval_infinity(x), n));
    }
  }
}

TEST(ProductForm, RejectsBadInput) {
  EXPECT_THROW(from_product_form(1, {}), Error);
  EXPECT_THROW(from_product_form(1, {{0, 0}}), Error);
}
