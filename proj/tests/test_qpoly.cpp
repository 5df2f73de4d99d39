#include <gtest/gtest.h>

#include "motdt/error.hpp"
#include "motdt/qpoly.hpp"
#include "test_support.hpp"

using namespace motdt;
using motdt::testing::Rng;

namespace {

QPoly P(const std::string& s) { return parse_polynomial(s); }

std::string syntax_message(const std::string& s) {
  try {
    parse_polynomial(s);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::syntax_error);
    return e.what();
  }
  ADD_FAILURE() << "accepted " << s;
  return "";
}

QPoly product(const std::vector<QPoly>& fs) {
  QPoly acc = QPoly::constant(1);
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

}  // namespace

TEST(QPolyParse, Examples) {
  EXPECT_EQ(P("t^3").coeffs(), (std::vector<Rational>{0, 0, 0, 1}));
  EXPECT_EQ(P("t^4/4 - t^2/2").coeffs(), (std::vector<Rational>{0, 0, Rational(-1, 2), 0, Rational(1, 4)}));
  EXPECT_EQ(P("1 + t").degree(), 1);
  EXPECT_EQ(P("(t - 1)^2*(t+1)"), P("t^3 - t^2 - t + 1"));
  EXPECT_EQ(P("-t^2"), P("0 - t*t"));
  EXPECT_EQ(P("3/6*t"), P("t/2"));
  EXPECT_EQ(P("2*(t + 1/3)"), P("2*t + 2/3"));
  EXPECT_EQ(P("t^0"), QPoly::constant(1));
  EXPECT_TRUE(P("t - t").is_zero());
}

TEST(QPolyParse, Errors) {
  EXPECT_NE(syntax_message("2t").find("column 2: implicit multiplication"), std::string::npos);
  EXPECT_NE(syntax_message("t(t+1)").find("implicit multiplication"), std::string::npos);
  EXPECT_NE(syntax_message("t^-1").find("column 3"), std::string::npos);
  EXPECT_NE(syntax_message("t / t").find("non-constant"), std::string::npos);
  EXPECT_NE(syntax_message("t/0").find("division by zero"), std::string::npos);
  EXPECT_NE(syntax_message("(t + 1").find("expected ')'"), std::string::npos);
  EXPECT_NE(syntax_message("t + ").find("end of input"), std::string::npos);
  EXPECT_NE(syntax_message("x^2").find("column 1: unexpected 'x'"), std::string::npos);
  EXPECT_NE(syntax_message("t^2^3").find("unexpected '^'"), std::string::npos);
  EXPECT_NE(syntax_message("t^1000").find("degree too large"), std::string::npos);
  syntax_message("");
  syntax_message("1.5*t");
}

TEST(QPoly, Rendering) {
  EXPECT_EQ(P("t^3 - t").to_string(), "t^3 - t");
  EXPECT_EQ(P("t - 1/2").to_string(), "t - 1/2");
  EXPECT_EQ(P("t^4/4 - t^2/2").to_string(), "1/4*t^4 - 1/2*t^2");
  EXPECT_EQ(P("-2").to_string(), "-2");
  EXPECT_EQ(QPoly().to_string(), "0");
}

TEST(QPoly, DivisionAndGcd) {
  auto [q, r] = divmod(P("t^3 - 1"), P("t - 1"));
  EXPECT_EQ(q, P("t^2 + t + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P("(t-1)^2*(t+2)"), P("(t-1)*(t+3)")), P("t - 1"));
  EXPECT_EQ(gcd(P("2*t + 4"), P("0")), P("t + 2"));
  EXPECT_EQ(P("t^3/3").derivative(), P("t^2"));
  EXPECT_EQ(P("t^2/2 - 3/4").primitive(), P("2*t^2 - 3"));
  EXPECT_THROW(divmod(P("t"), QPoly()), Error);
}

TEST(QPoly, Squarefree) {
  auto parts = squarefree_decomposition(P("t^3 - t"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], std::make_pair(P("t^3 - t"), 1));
  parts = squarefree_decomposition(P("t*(t-1)^2"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], std::make_pair(P("t"), 1));
  EXPECT_EQ(parts[1], std::make_pair(P("t - 1"), 2));
  parts = squarefree_decomposition(P("5*t^4"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], std::make_pair(P("t"), 4));
}

TEST(QPoly, SquarefreeRandomProducts) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly f = QPoly::constant(Rational(rng.range(1, 5), rng.range(1, 3)));
    std::map<int, QPoly> expected;
    for (int m = 1; m <= 3; ++m) {
      if (rng.range(0, 1) == 0) continue;
      QPoly part = P("t - " + std::to_string(rng.range(-4, 4)) + "/" + std::to_string(rng.range(1, 3)));
      bool fresh = true;
      for (const auto& [k, e] : expected) fresh = fresh && gcd(e, part).degree() == 0;
      if (!fresh) continue;
      expected[m] = part.monic();
      f = f * part.pow(m);
    }
    if (f.degree() < 1) continue;
    std::map<int, QPoly> got;
    for (const auto& [p, m] : squarefree_decomposition(f)) got[m] = p;
    EXPECT_EQ(got, expected) << f.to_string();
  }
}

TEST(QPoly, Factorization) {
  auto fac = factor_squarefree(P("t^3 - t"));
  EXPECT_TRUE(fac.complete);
  EXPECT_EQ(fac.factors.size(), 3u);
  EXPECT_EQ(product(fac.factors), P("t^3 - t"));
  fac = factor_squarefree(P("(t^2 - 2)*(t^2 + t + 1)*(t - 1/2)"));
  EXPECT_TRUE(fac.complete);
  ASSERT_EQ(fac.factors.size(), 3u);
  EXPECT_EQ(product(fac.factors), P("(t^2 - 2)*(t^2 + t + 1)*(t - 1/2)"));
  fac = factor_squarefree(P("t^4 + 1"));
  ASSERT_EQ(fac.factors.size(), 1u);
  fac = factor_squarefree(P("(t^3 - 2)*(t^3 + 3*t + 5)"));
  EXPECT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(product(fac.factors), P("(t^3 - 2)*(t^3 + 3*t + 5)"));
}

TEST(QPoly, FactorizationBudget) {
  auto fac = factor_squarefree(P("(t^3 - 2)*(t^3 + 3*t + 5)"), 10);
  EXPECT_FALSE(fac.complete);
  EXPECT_EQ(product(fac.factors), P("(t^3 - 2)*(t^3 + 3*t + 5)"));
}

TEST(QPoly, FactorizationRandom) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<QPoly> parts;
    QPoly f = QPoly::constant(1);
    int n = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < n; ++i) {
      int deg = static_cast<int>(rng.range(1, 2));
      std::vector<Rational> c;
      for (int j = 0; j < deg; ++j) c.push_back(Rational(rng.range(-5, 5)));
      c.push_back(1);
      QPoly p(c);
      if (gcd(f, p).degree() > 0 || squarefree_decomposition(p).size() != 1 || squarefree_decomposition(p)[0].second != 1)
        continue;
      f = f * p;
    }
    if (f.degree() < 1) continue;
    auto fac = factor_squarefree(f);
    EXPECT_TRUE(fac.complete);
    EXPECT_EQ(product(fac.factors), f);
    for (const auto& g : fac.factors) {
      EXPECT_EQ(g.leading(), 1);
      // No rational roots in quadratic factors and no further split.
      if (g.degree() == 2) EXPECT_EQ(factor_squarefree(g).factors.size(), 1u);
    }
  }
}
