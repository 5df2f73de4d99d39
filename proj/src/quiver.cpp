#include "motdt/quiver.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"

namespace motdt {

QPoly parse_potential(const std::string& text) {
  QPoly w = parse_polynomial(text);
  if (w.degree() < 2) fail(ErrorKind::unsupported_potential, "degree < 2: W' has no isolated critical points");
  return w;
}

long CriticalData::point_count() const {
  long n = 0;
  for (const auto& grp : groups) n += grp.g;
  return n;
}

namespace {

// Coefficients from the constant term up, by absolute value and then sign.
bool factor_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational &x = a.coeffs()[i], &y = b.coeffs()[i];
    if (abs(x) != abs(y)) return abs(x) < abs(y);
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

CriticalData critical_data(const QPoly& w) {
  if (w.degree() < 2) fail(ErrorKind::unsupported_potential, "degree < 2: W' has no isolated critical points");
  CriticalData out;
  out.derivative = w.derivative();
  for (const auto& [part, mult] : squarefree_decomposition(out.derivative)) {
    Factorization fac = factor_squarefree(part);
    out.factorization_complete = out.factorization_complete && fac.complete;
    for (auto& f : fac.factors) out.groups.push_back({f, f.degree(), mult + 1});
  }
  std::sort(out.groups.begin(), out.groups.end(), [](const CriticalGroup& a, const CriticalGroup& b) {
    if (a.d != b.d) return a.d < b.d;
    return factor_less(a.factor, b.factor);
  });
  long total = 0;
  for (const auto& grp : out.groups) total += grp.g * (grp.d - 1);
  if (total != out.derivative.degree())
    fail(ErrorKind::internal_inconsistency, "critical points do not account for deg W'");
  return out;
}

Series local_series(long d, int order) {
  if (d < 2) fail(ErrorKind::invalid_argument, "local_series needs d >= 2");
  MotiveFraction c(MonodromicMotive(1) - make_mu(d), cyclotomic_unit(1));
  return sym(Series::monomial(1, order, {1}, c));
}

Series global_series(const CriticalData& c, int order) {
  const long r = c.point_count();
  if (r < 1) fail(ErrorKind::invalid_argument, "no critical points");
  if (r > kMaxCriticalPoints)
    fail(ErrorKind::unsupported_potential,
         std::to_string(r) + " critical points, at most " + std::to_string(kMaxCriticalPoints) + " supported");
  std::map<long, Series> local;
  for (const auto& grp : c.groups)
    if (!local.count(grp.d)) local.emplace(grp.d, local_series(grp.d, order));
  Series acc = Series::one(static_cast<int>(r), order);
  int axis = 0;
  for (const auto& grp : c.groups)
    for (long i = 0; i < grp.g; ++i) acc = mul(acc, on_axis(local.at(grp.d), static_cast<int>(r), axis++));
  return acc;
}

std::map<DegreeVector, MonodromicMotive> extract_omega(const Series& phi) {
  const MotiveFraction scale(monomial(Rational(-1, 2)) - monomial(Rational(1, 2)));
  std::map<DegreeVector, MonodromicMotive> out;
  const Series log = plog(phi);
  for (const auto& [v, c] : log.coeffs()) {
    auto m = (scale * c).as_motive();
    if (!m) fail(ErrorKind::denominator_not_cleared, "Omega has a denominator: " + (scale * c).to_string());
    if (!m->is_zero()) out.emplace(v, *m);
  }
  return out;
}

MonodromicMotive expected_omega(long d) { return make_tate(-1) * (MonodromicMotive(1) - make_mu(d)); }

WallcrossResult wallcross_check(long d, int order) {
  Series a = local_series(d, order);
  Series s = sym(Series::monomial(1, order, {1}, MotiveFraction(MonodromicMotive(1) - make_mu(d))));
  Series b = solve_twist_equation(s);
  WallcrossResult r;
  for (int n = 0; n <= order; ++n) {
    if (a.coeff({n}) == b.coeff({n})) continue;
    r.consistent = false;
    r.diff = "d=" + std::to_string(d) + " T^" + std::to_string(n) + ": " + a.coeff({n}).to_string() + " vs " +
             b.coeff({n}).to_string();
    break;
  }
  return r;
}

std::vector<long> milnor_table(const CriticalData& c) {
  std::vector<long> out;
  for (const auto& grp : c.groups) {
    auto omega = extract_omega(local_series(grp.d, 1));
    auto it = omega.find({1});
    Integer chi = it == omega.end() ? Integer(0) : euler_char(it->second);
    if (chi != grp.d - 1)
      fail(ErrorKind::theorem_violation, "chi(Omega_1) = " + chi.get_str() + " for d = " + std::to_string(grp.d));
    out.push_back(chi.get_si());
  }
  return out;
}

DTReport run_dt(const std::string& potential, int order) {
  if (order < 1 || order > 32) fail(ErrorKind::invalid_argument, "order must be in 1..32");
  QPoly w = parse_potential(potential);
  long distinct = 0;
  for (const auto& [part, mult] : squarefree_decomposition(w.derivative())) distinct += part.degree();
  if (distinct > kMaxCriticalPoints)
    fail(ErrorKind::unsupported_potential,
         std::to_string(distinct) + " critical points, at most " + std::to_string(kMaxCriticalPoints) + " supported");
  CriticalData c = critical_data(w);
  DTReport r;
  r.potential = w.to_string();
  r.derivative = c.derivative.to_string();
  r.order_checked = order;
  r.factorization_complete = c.factorization_complete;

  std::set<long> ds;
  for (const auto& grp : c.groups) ds.insert(grp.d);
  std::vector<std::future<WallcrossResult>> jobs;
  for (long d : ds) jobs.push_back(std::async(std::launch::async, [d, order] { return wallcross_check(d, order); }));

  auto omega = extract_omega(global_series(c, order));
  const int arity = static_cast<int>(c.point_count());
  int axis = 0;
  for (const auto& grp : c.groups) {
    const MonodromicMotive want = expected_omega(grp.d);
    DegreeVector e(arity, 0);
    e[axis] = 1;
    auto it = omega.find(e);
    GroupReport g;
    g.factor = grp.factor.to_string();
    g.g = grp.g;
    g.d = grp.d;
    g.omega = it == omega.end() ? MonodromicMotive() : it->second;
    g.omega_pretty = render_mu_basis(g.omega, grp.d);
    g.omega_latex = render_mu_basis_latex(g.omega, grp.d);
    g.chi = euler_char(g.omega);
    for (long i = 0; i < grp.g; ++i, ++axis) {
      DegreeVector v(arity, 0);
      v[axis] = 1;
      auto jt = omega.find(v);
      MonodromicMotive got = jt == omega.end() ? MonodromicMotive() : jt->second;
      if (got != want) {
        r.omega_matches = false;
        r.problems.push_back("Omega at " + g.factor + " is " + got.to_string());
      }
    }
    if (g.chi != grp.d - 1) {
      r.omega_matches = false;
      r.problems.push_back("chi(Omega) at " + g.factor + " is " + g.chi.get_str());
    }
    r.groups.push_back(std::move(g));
  }
  for (const auto& [v, m] : omega)
    if (total_degree(v) >= 2) {
      r.higher_vanish = false;
      std::string deg;
      for (int k : v) deg += (deg.empty() ? "" : ",") + std::to_string(k);
      r.problems.push_back("Omega at (" + deg + ") is " + m.to_string());
    }
  for (auto& job : jobs) {
    WallcrossResult w = job.get();
    if (!w.consistent) {
      r.routes_consistent = false;
      r.problems.push_back(w.diff);
    }
  }
  return r;
}

std::string render_text(const DTReport& r) {
  std::ostringstream out;
  out << "potential: " << r.potential << "\n";
  out << "derivative: " << r.derivative << "\n";
  for (std::size_t i = 0; i < r.groups.size(); ++i) {
    const auto& g = r.groups[i];
    out << "group " << i + 1 << ": factor " << g.factor << ", g = " << g.g << ", d = " << g.d << "\n";
    out << "  Omega = " << g.omega.to_string() << " = " << g.omega_pretty << "\n";
    out << "  chi = " << g.chi.get_str() << "\n";
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "higher Omega vanish to order " << r.order_checked << ": " << yes(r.higher_vanish) << "\n";
  out << "routes consistent to order " << r.order_checked << ": " << yes(r.routes_consistent) << "\n";
  if (!r.factorization_complete) out << "note: factorization search budget exhausted, some factors may be reducible\n";
  for (const auto& p : r.problems) out << "problem: " << p << "\n";
  return out.str();
}

std::string render_latex(const DTReport& r) {
  std::ostringstream out;
  out << "% W = " << r.potential << ", checked to order " << r.order_checked << "\n";
  out << "\\begin{align*}\n";
  for (std::size_t i = 0; i < r.groups.size(); ++i) {
    const auto& g = r.groups[i];
    out << "\\Omega_{e_{" << i + 1 << "}} &= " << g.omega_latex << " && d = " << g.d << ",\\ \\chi = " << g.chi.get_str();
    out << (i + 1 < r.groups.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  return out.str();
}

}  // namespace motdt
