#include <gtest/gtest.h>

#include <chrono>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"
#include "motdt/lambda.hpp"
#include "motdt/quiver.hpp"

using namespace motdt;

namespace {

MonodromicMotive q(long num, long den = 1, long c = 1) { return MonodromicMotive::monomial(make_rational(num, den), c); }

MonodromicMotive omega_sum(long d) {
  MonodromicMotive s;
  for (long j = 1; j < d; ++j) s += q(j, d) * q(-1, 2);
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::invalid_argument;
}

std::vector<std::pair<std::string, long>> groups_of(const std::string& w) {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& g : critical_data(parse_potential(w)).groups) out.emplace_back(g.factor.to_string(), g.d);
  return out;
}

}  // namespace

TEST(Quiver, ParsePotential) {
  EXPECT_EQ(parse_potential("t^3").coeffs(), (std::vector<Rational>{0, 0, 0, 1}));
  EXPECT_EQ(kind_of([] { parse_potential("1 + t"); }), ErrorKind::unsupported_potential);
  EXPECT_EQ(kind_of([] { parse_potential("t"); }), ErrorKind::unsupported_potential);
  EXPECT_EQ(kind_of([] { parse_potential("7"); }), ErrorKind::unsupported_potential);
  EXPECT_EQ(kind_of([] { parse_potential("2t^2"); }), ErrorKind::syntax_error);
}

TEST(Quiver, CriticalData) {
  using G = std::vector<std::pair<std::string, long>>;
  EXPECT_EQ(groups_of("t^5"), (G{{"t", 5}}));
  EXPECT_EQ(groups_of("t^4/4 - t^2/2"), (G{{"t", 2}, {"t - 1", 2}, {"t + 1", 2}}));
  EXPECT_EQ(groups_of("t^4/4 - 2*t^3/3 + t^2/2"), (G{{"t", 2}, {"t - 1", 3}}));
  EXPECT_EQ(groups_of("t^3/3 - 2*t"), (G{{"t^2 - 2", 2}}));
  CriticalData c = critical_data(parse_potential("t^3/3 - 2*t"));
  EXPECT_EQ(c.groups[0].g, 2);
  EXPECT_EQ(c.point_count(), 2);
  // Sum of g (d - 1) is deg W'.
  for (const char* w : {"t^7 - 3*t^5 + t", "(t^2 + 1)^3*(t - 2)^2", "t^6/6 - t^4/4"}) {
    CriticalData cd = critical_data(parse_potential(w));
    long total = 0;
    for (const auto& g : cd.groups) total += g.g * (g.d - 1);
    EXPECT_EQ(total, cd.derivative.degree()) << w;
  }
}

TEST(Quiver, LocalSeries) {
  Series s = local_series(2, 2);
  // (1 - [mu_2])/(L - 1) and its sigma^2.
  EXPECT_EQ(s.coeff({1}), MotiveFraction(q(1, 2, -1), cyclotomic_unit(1)));
  EXPECT_EQ(s.coeff({2}), MotiveFraction(q(1), cyclotomic_unit(1) * cyclotomic_unit(2)));
  EXPECT_EQ(s.coeff({2}), sigma_fraction(MotiveFraction(q(1, 2, -1), cyclotomic_unit(1)), 2));
  EXPECT_EQ(s.coeff({2}).to_string(), "q/((q-1)*(q^2-1))");
  for (long d = 2; d <= 6; ++d)
    EXPECT_EQ(local_series(d, 3).coeff({1}), MotiveFraction(MonodromicMotive(1) - make_mu(d), cyclotomic_unit(1)));
  EXPECT_EQ(local_series(3, 0), Series::one(1, 0));
  EXPECT_EQ(kind_of([] { local_series(1, 3); }), ErrorKind::invalid_argument);
}

TEST(Quiver, ExtractOmegaHomogeneous) {
  for (long d = 2; d <= 8; ++d) {
    auto omega = extract_omega(local_series(d, 8));
    ASSERT_EQ(omega.size(), 1u) << d;
    EXPECT_EQ(omega.begin()->first, DegreeVector{1});
    EXPECT_EQ(omega.begin()->second, omega_sum(d));
    EXPECT_EQ(omega.begin()->second, expected_omega(d));
    EXPECT_EQ(render_mu_basis(omega.begin()->second, d), "L^{-1/2}(1-[mu_" + std::to_string(d) + "])");
  }
  EXPECT_EQ(extract_omega(local_series(2, 4)).at({1}), MonodromicMotive(1));
  EXPECT_TRUE(extract_omega(Series::one(2, 5)).empty());
}

TEST(Quiver, ExtractOmegaRejectsDenominators) {
  Series phi = Series::one(1, 3);
  phi.set({1}, MotiveFraction(q(0), cyclotomic_unit(1) * cyclotomic_unit(1)));
  EXPECT_EQ(kind_of([&] { extract_omega(phi); }), ErrorKind::denominator_not_cleared);
}

TEST(Quiver, GlobalSeries) {
  CriticalData c = critical_data(parse_potential("t^4/4 - 2*t^3/3 + t^2/2"));
  Series g = global_series(c, 4);
  EXPECT_EQ(g.arity(), 2);
  EXPECT_EQ(g.coeff({1, 1}), local_series(2, 4).coeff({1}) * local_series(3, 4).coeff({1}));
  EXPECT_EQ(g.coeff({2, 0}), local_series(2, 4).coeff({2}));
  // One group is the local series.
  EXPECT_EQ(global_series(critical_data(parse_potential("t^4")), 5), local_series(4, 5));
  // Collapsing two d = 2 points gives the square of the d = 2 series.
  CriticalData two = critical_data(parse_potential("t^3/3 - t"));
  EXPECT_EQ(collapse(global_series(two, 5)), mul(local_series(2, 5), local_series(2, 5)));
}

TEST(Quiver, Wallcross) {
  for (long d = 2; d <= 8; ++d) {
    WallcrossResult r = wallcross_check(d, 8);
    EXPECT_TRUE(r.consistent) << r.diff;
    EXPECT_TRUE(r.diff.empty());
  }
  EXPECT_TRUE(wallcross_check(3, 0).consistent);
}

TEST(Quiver, MilnorTable) {
  EXPECT_EQ(milnor_table(critical_data(parse_potential("t^5"))), (std::vector<long>{4}));
  EXPECT_EQ(milnor_table(critical_data(parse_potential("t^4/4 - t^2/2"))), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(milnor_table(critical_data(parse_potential("t^4/4 - 2*t^3/3 + t^2/2"))), (std::vector<long>{1, 2}));
}

TEST(Quiver, RunDtHomogeneous) {
  auto start = std::chrono::steady_clock::now();
  for (long d = 2; d <= 8; ++d) {
    DTReport r = run_dt("t^" + std::to_string(d), 8);
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.groups.size(), 1u);
    EXPECT_EQ(r.groups[0].omega, omega_sum(d));
    EXPECT_EQ(r.groups[0].chi, d - 1);
    EXPECT_EQ(r.groups[0].omega_pretty, "L^{-1/2}(1-[mu_" + std::to_string(d) + "])");
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Quiver, RunDtMultiPoint) {
  DTReport a = run_dt("t^4/4 - t^2/2", 6);
  EXPECT_TRUE(a.ok());
  ASSERT_EQ(a.groups.size(), 3u);
  for (const auto& g : a.groups) {
    EXPECT_EQ(g.omega, MonodromicMotive(1));
    EXPECT_EQ(g.chi, 1);
  }
  DTReport b = run_dt("t^4/4 - 2*t^3/3 + t^2/2", 6);
  EXPECT_TRUE(b.ok());
  ASSERT_EQ(b.groups.size(), 2u);
  EXPECT_EQ(b.groups[0].omega, expected_omega(2));
  EXPECT_EQ(b.groups[1].omega, expected_omega(3));
  EXPECT_EQ(b.groups[1].chi, 2);
  DTReport c = run_dt("t^3/3 - 2*t", 6);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.groups[0].g, 2);
}

TEST(Quiver, PerturbationInvariance) {
  // Same multiset {(g, d)} gives the same report apart from labels.
  auto strip = [](DTReport r) {
    std::vector<std::tuple<long, long, std::string, std::string>> out;
    for (const auto& g : r.groups) out.emplace_back(g.g, g.d, g.omega.to_string(), g.chi.get_str());
    return std::make_tuple(out, r.ok(), r.order_checked);
  };
  EXPECT_EQ(strip(run_dt("t^3", 6)), strip(run_dt("t^3 + 5*t^2 + 25*t/3", 6)));
  EXPECT_EQ(strip(run_dt("t^4/4 - t^2/2", 5)), strip(run_dt("t^4 - 14*t^2 + 24*t", 5)));
  EXPECT_EQ(strip(run_dt("(t-1)^4 + 2", 6)), strip(run_dt("t^4", 6)));
}

TEST(Quiver, RunDtErrors) {
  EXPECT_EQ(kind_of([] { run_dt("t", 8); }), ErrorKind::unsupported_potential);
  EXPECT_EQ(kind_of([] { run_dt("t^2", 0); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { run_dt("t^11 - t", 2); }), ErrorKind::unsupported_potential);
}

TEST(Quiver, Rendering) {
  DTReport r = run_dt("t^3", 4);
  EXPECT_EQ(render_text(r),
            "potential: t^3\n"
            "derivative: 3*t^2\n"
            "group 1: factor t, g = 1, d = 3\n"
            "  Omega = q^(-1/6) + q^(1/6) = L^{-1/2}(1-[mu_3])\n"
            "  chi = 2\n"
            "higher Omega vanish to order 4: yes\n"
            "routes consistent to order 4: yes\n");
  EXPECT_NE(render_latex(r).find("\\Omega_{e_{1}} &= \\mathbb{L}^{-1/2}(1-[\\mu_{3}])"), std::string::npos);
}
