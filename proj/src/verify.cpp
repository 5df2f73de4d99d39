#include "motdt/verify.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"
#include "motdt/json_io.hpp"
#include "motdt/lambda.hpp"
#include "motdt/progression.hpp"
#include "motdt/quiver.hpp"
#include "motdt/resolution.hpp"
#include "motdt/sampling.hpp"

#ifndef MOTDT_DATA_DIR
#define MOTDT_DATA_DIR "data"
#endif

namespace motdt {

using sampling::Rng;

namespace {

class Runner {
 public:
  Runner(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  // f returns an empty string on success, otherwise the first counterexample.
  void check(const std::string& name, const std::string& detail, const std::function<std::string()>& f) {
    CheckResult r{suite_, name, false, detail};
    try {
      std::string failure = f();
      r.pass = failure.empty();
      if (!r.pass) r.detail += "; " + failure;
    } catch (const std::exception& e) {
      r.detail += "; error: " + std::string(e.what());
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

void suite_core(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("core", out);
  run.check("ring-axioms", "100 samples", [&]() -> std::string {
    Rng rng(o.seed);
    for (int i = 0; i < 100; ++i) {
      auto x = sampling::random_motive(rng), y = sampling::random_motive(rng), z = sampling::random_motive(rng);
      if ((x * y) * z != x * (y * z)) return "associativity at sample " + std::to_string(i);
      if (x * (y + z) != x * y + x * z) return "distributivity at sample " + std::to_string(i);
      if (x * y != y * x || x + y != y + x) return "commutativity at sample " + std::to_string(i);
    }
    return "";
  });
  run.check("fraction-normalization", "100 samples", [&]() -> std::string {
    Rng rng(o.seed + 1);
    for (int i = 0; i < 100; ++i) {
      auto x = sampling::random_motive(rng);
      TateUnit u = sampling::random_unit(rng);
      MotiveFraction f(x * u.expand(), u);
      if (!f.is_denominator_free() || f.numerator() != x) return "x*u/u at sample " + std::to_string(i);
    }
    return "";
  });
  run.check("euler-characteristic", "100 samples", [&]() -> std::string {
    Rng rng(o.seed + 2);
    for (int i = 0; i < 100; ++i) {
      auto x = sampling::random_motive(rng), y = sampling::random_motive(rng);
      if (euler_char(x * y) != euler_char(x) * euler_char(y) || euler_char(x + y) != euler_char(x) + euler_char(y))
        return "sample " + std::to_string(i);
    }
    return "";
  });
  run.check("sqrt-lefschetz", "(1-[mu_2])^2 = L", []() -> std::string {
    MonodromicMotive s = MonodromicMotive(1) - make_mu(2);
    if (s * s != make_tate(2)) return mismatch("square", (s * s).to_string(), make_tate(2).to_string());
    return "";
  });
  run.check("mu-basis", "d = 2..12 and 100 samples", [&]() -> std::string {
    for (long d = 2; d <= 12; ++d) {
      MonodromicMotive w = expected_omega(d);
      std::string want = "L^{-1/2}(1-[mu_" + std::to_string(d) + "])";
      if (render_mu_basis(w, d) != want) return mismatch("rendering", render_mu_basis(w, d), want);
    }
    Rng rng(o.seed + 3);
    for (int i = 0; i < 100; ++i) {
      auto x = sampling::random_motive(rng);
      if (expand(to_mu_basis(x)) != x) return "round trip at sample " + std::to_string(i);
    }
    return "";
  });
}

void suite_lambda(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("lambda", out);
  const int n_max = 5;
  const std::string detail = std::to_string(o.lambda_samples) + " samples, n <= 5";
  auto samples = [&](std::uint64_t salt) {
    Rng rng(o.seed + salt);
    std::vector<std::pair<MonodromicMotive, MonodromicMotive>> xs;
    for (int i = 0; i < o.lambda_samples; ++i) {
      auto x = sampling::random_motive(rng);
      auto y = sampling::random_motive(rng);
      xs.emplace_back(std::move(x), std::move(y));
    }
    return xs;
  };
  const auto xs = samples(10);
  const MonodromicMotive L = make_tate(2);
  const MonodromicMotive half = MonodromicMotive(0) - make_tate(1);  // -L^(1/2)
  const MonodromicMotive mu2m1 = make_mu(2) - MonodromicMotive(1);

  run.check("sigma-additivity", detail, [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& [x, y] = xs[i];
      auto sx = sigma_poly_vector(x, n_max), sy = sigma_poly_vector(y, n_max), sxy = sigma_poly_vector(x + y, n_max);
      for (int n = 0; n <= n_max; ++n) {
        MonodromicMotive acc;
        for (int k = 0; k <= n; ++k) acc += sx[k] * sy[n - k];
        if (acc != sxy[n]) return "sample " + std::to_string(i) + ", n = " + std::to_string(n);
      }
    }
    return "";
  });
  run.check("tate-twists", detail + ", twists by L and -L^(1/2)", [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& x = xs[i].first;
      auto s = sigma_poly_vector(x, n_max), sl = sigma_poly_vector(L * x, n_max), sh = sigma_poly_vector(half * x, n_max);
      for (int n = 0; n <= n_max; ++n) {
        if (sl[n] != L.pow(n) * s[n]) return "L twist at sample " + std::to_string(i) + ", n = " + std::to_string(n);
        if (sh[n] != half.pow(n) * s[n]) return "half twist at sample " + std::to_string(i) + ", n = " + std::to_string(n);
      }
    }
    return "";
  });
  run.check("line-elements", "L and [mu_2]-1, n <= 5", [&]() -> std::string {
    for (const auto& l : {L, mu2m1}) {
      auto s = sigma_poly_vector(l, n_max);
      for (int n = 0; n <= n_max; ++n)
        if (s[n] != l.pow(n)) return mismatch("sigma^" + std::to_string(n) + "(" + l.to_string() + ")", s[n].to_string(), l.pow(n).to_string());
      if (opposite_lambda(MotiveFraction(l), 1) != MotiveFraction(l)) return "lambda^1 of a line element";
      if (!opposite_lambda(MotiveFraction(l), 2).is_zero()) return "lambda^2 of a line element is not 0";
    }
    return "";
  });
  run.check("sqrt-lefschetz", "(1-[mu_2])^2 = L", [&]() -> std::string {
    MonodromicMotive s = MonodromicMotive(1) - make_mu(2);
    return s * s == L ? "" : mismatch("square", (s * s).to_string(), L.to_string());
  });
  run.check("chi-compatibility", detail, [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& x = xs[i].first;
      auto s = sigma_poly_vector(x, n_max);
      for (int n = 0; n <= n_max; ++n)
        if (euler_char(s[n]) != sigma_int(euler_char(x), n)) return "sample " + std::to_string(i) + ", n = " + std::to_string(n);
    }
    return "";
  });
}

void suite_series(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("series", out);
  const std::string detail = std::to_string(o.series_samples) + " samples, N = 6, arity <= 2";
  run.check("plog-sym", detail, [&]() -> std::string {
    Rng rng(o.seed + 20);
    for (int i = 0; i < o.series_samples; ++i) {
      int arity = static_cast<int>(rng.range(1, 2));
      Series a = sampling::random_f1_series(rng, arity, 6);
      if (plog(sym(a)) != a) return "sample " + std::to_string(i) + ": " + a.to_string();
    }
    return "";
  });
  run.check("sym-plog", detail, [&]() -> std::string {
    Rng rng(o.seed + 21);
    for (int i = 0; i < o.series_samples; ++i) {
      int arity = static_cast<int>(rng.range(1, 2));
      Series b = Series::one(arity, 6) + sampling::random_f1_series(rng, arity, 6);
      if (sym(plog(b)) != b) return "sample " + std::to_string(i) + ": " + b.to_string();
    }
    return "";
  });
}

// sign = -1 at infinity, where coefficients are -tau_(-k).
Series hadamard(const Series& x, const Series& y, int sign = 1) {
  Series z(1, std::min(x.order(), y.order()));
  for (const auto& [v, c] : x.coeffs()) z.set(v, c * y.coeff(v) * MotiveFraction(sign));
  return z;
}

void suite_progression(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("progression", out);
  const int order = 12;
  const std::string detail = std::to_string(o.progression_samples) + " samples, order 12";
  Rng rng(o.seed + 30);
  std::vector<sampling::ProductForm> forms;
  std::vector<RationalProgression> xs;
  for (int i = 0; i < o.progression_samples; ++i) {
    forms.push_back(sampling::random_product_form(rng));
    xs.push_back(from_product_form(forms.back().g, forms.back().factors));
  }
  auto zero = [&](std::size_t i) { return sampling::geometric_zero(forms[i].g, forms[i].factors, order); };
  auto inf = [&](std::size_t i) { return sampling::geometric_infinity(forms[i].g, forms[i].factors, order); };

  run.check("partial-fractions", detail + ", both ends", [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (expand_zero(xs[i], order) != zero(i)) return "at 0, sample " + std::to_string(i);
      if (expand_infinity(xs[i], order) != inf(i)) return "at infinity, sample " + std::to_string(i);
    }
    return "";
  });
  run.check("lcm-product-rule", detail + ", consecutive pairs", [&]() -> std::string {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      RationalProgression p = mul(xs[i], xs[i + 1]);
      if (expand_zero(p, order) != hadamard(zero(i), zero(i + 1))) return "at 0, pair " + std::to_string(i);
      if (expand_infinity(p, order) != hadamard(inf(i), inf(i + 1), -1)) return "at infinity, pair " + std::to_string(i);
      long bx = 1, by = 1;
      for (const auto& [a, b] : forms[i].factors) bx = std::lcm(bx, b);
      for (const auto& [a, b] : forms[i + 1].factors) by = std::lcm(by, b);
      for (const auto& s : p.summands())
        if (s.b != std::lcm(bx, by)) return "period " + std::to_string(s.b) + " at pair " + std::to_string(i);
    }
    return "";
  });
  run.check("sigma-n", detail + ", n <= 3, both ends", [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Series z = zero(i), w = inf(i);
      for (int n = 0; n <= 3; ++n) {
        RationalProgression s = sigma_n(xs[i], n);
        Series sz = expand_zero(s, order), sw = expand_infinity(s, order);
        for (int k = 1; k <= order; ++k)
          if (sz.coeff({k}) != sigma_fraction(z.coeff({k}), n))
            return "at 0, sample " + std::to_string(i) + ", n = " + std::to_string(n) + ", T^" + std::to_string(k);
        for (int k = 0; k <= order; ++k)
          if (sw.coeff({k}) != -sigma_fraction(-w.coeff({k}), n))
            return "at infinity, sample " + std::to_string(i) + ", n = " + std::to_string(n) + ", S^" + std::to_string(k);
      }
    }
    return "";
  });
  run.check("value-at-infinity", detail + ", n <= 3", [&]() -> std::string {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int n = 0; n <= 3; ++n)
        if (-eval_infinity(sigma_n(xs[i], n)) != sigma_fraction(-eval_infinity(xs[i]), n))
          return "sample " + std::to_string(i) + ", n = " + std::to_string(n);
    return "";
  });
}

void suite_wallcross(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("wallcross", out);
  for (long d = 2; d <= o.max_d; ++d)
    run.check("routes-d" + std::to_string(d), "N = " + std::to_string(o.order), [&]() -> std::string {
      WallcrossResult r = wallcross_check(d, o.order);
      return r.consistent ? "" : r.diff;
    });
}

void suite_resolution(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("resolution", out);
  run.check("zd-both-routes", "d = 2..6", []() -> std::string {
    for (long d = 2; d <= 6; ++d) {
      PhiResult r = phi_of_datum(zd_datum(d));
      if (r.via_infinity != expected_omega(d)) return mismatch("d = " + std::to_string(d), r.via_infinity.to_string(), expected_omega(d).to_string());
      if (r.closed_form != expected_omega(d)) return mismatch("d = " + std::to_string(d), r.closed_form.to_string(), expected_omega(d).to_string());
    }
    return "";
  });
  run.check("cusp-thom-sebastiani", "cusp_2_3.json", [&]() -> std::string {
    std::string path = o.cusp_file.empty() ? default_data_dir() + "/cusp_2_3.json" : o.cusp_file;
    PhiResult r = phi_of_datum(datum_from_json(read_json_file(path)));
    if (r.via_infinity != r.closed_form) return "routes differ";
    if (r.closed_form != thom_sebastiani(2, 3)) return mismatch("phi", r.closed_form.to_string(), thom_sebastiani(2, 3).to_string());
    return "";
  });
  run.check("thom-sebastiani-symmetry", "a, b <= 8", []() -> std::string {
    for (long a = 2; a <= 8; ++a)
      for (long b = 2; b <= 8; ++b) {
        if (thom_sebastiani(a, b) != thom_sebastiani(b, a)) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (euler_char(thom_sebastiani(a, b)) != (1 - a) * (1 - b)) return "chi at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    return "";
  });
}

std::string table_string(const std::vector<long>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + "]";
}

void suite_milnor(const VerifyOptions& /*o*/, std::vector<CheckResult>& out) {
  Runner run("milnor", out);
  const std::vector<std::pair<std::string, std::vector<long>>> cases = {
      {"t^2", {1}}, {"t^3", {2}}, {"t^4", {3}}, {"t^5", {4}}, {"t^6", {5}}, {"t^7", {6}}, {"t^8", {7}},
      {"t^4/4 - t^2/2", {1, 1, 1}}, {"t^4/4 - 2*t^3/3 + t^2/2", {1, 2}}};
  for (const auto& [w, want] : cases)
    run.check("table " + w, table_string(want), [&]() -> std::string {
      auto got = milnor_table(critical_data(parse_potential(w)));
      return got == want ? "" : mismatch("table", table_string(got), table_string(want));
    });
}

void suite_dt(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Runner run("dt", out);
  auto dt_check = [&](const std::string& w, int order) {
    run.check(w, "order " + std::to_string(order), [&]() -> std::string {
      DTReport r = run_dt(w, order);
      if (!r.ok()) return r.problems.empty() ? "checks failed" : r.problems.front();
      for (const auto& g : r.groups)
        if (g.omega != expected_omega(g.d)) return mismatch("Omega at " + g.factor, g.omega.to_string(), expected_omega(g.d).to_string());
      return "";
    });
  };
  for (long d = 2; d <= 8; ++d) dt_check("t^" + std::to_string(d), o.order);
  dt_check("t^4/4 - t^2/2", std::min(o.order, 6));
  dt_check("t^4/4 - 2*t^3/3 + t^2/2", std::min(o.order, 6));
}

using Suite = void (*)(const VerifyOptions&, std::vector<CheckResult>&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"core", suite_core},           {"lambda", suite_lambda},         {"series", suite_series},
      {"progression", suite_progression}, {"wallcross", suite_wallcross}, {"resolution", suite_resolution},
      {"milnor", suite_milnor},       {"dt", suite_dt}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, f] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("MOTDT_DATA_DIR")) return env;
  return MOTDT_DATA_DIR;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  if (opts.max_d < 2) fail(ErrorKind::invalid_argument, "--max-d must be >= 2");
  if (opts.order < 0 || opts.order > 32) fail(ErrorKind::invalid_argument, "order must be in 0..32");
  std::vector<CheckResult> out;
  bool known = false;
  for (const auto& [name, f] : suites())
    if (opts.suite == "all" || opts.suite == name) {
      known = true;
      f(opts, out);
    }
  if (!known) fail(ErrorKind::invalid_argument, "unknown suite '" + opts.suite + "'");
  return out;
}

}  // namespace motdt
