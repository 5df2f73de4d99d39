#include "motdt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"
#include "motdt/json_io.hpp"
#include "motdt/quiver.hpp"
#include "motdt/resolution.hpp"
#include "motdt/verify.hpp"

namespace motdt {

namespace {

// Runs body with its output buffered, so that --out receives either the
// whole result or nothing.
int guarded(const CliConfig& c, std::ostream& out, std::ostream& err, const std::function<int(std::ostream&)>& body) {
  std::ostringstream buf;
  int code;
  try {
    code = body(buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kExitInput : kExitMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  if (c.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(c.out);
    if (!f || !(f << buf.str())) {
      err << "error: cannot write " << c.out << "\n";
      return kExitInput;
    }
  }
  return code;
}

void require_format(const CliConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  fail(ErrorKind::invalid_argument, "format '" + c.format + "' is not available for " + c.subcommand);
}

}  // namespace

int cmd_dt(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&](std::ostream& o) {
    require_format(c, {"text", "json", "latex"});
    if (c.potential.empty()) fail(ErrorKind::invalid_argument, "dt needs --potential");
    DTReport r = run_dt(c.potential, c.order);
    if (c.format == "json") o << report_to_json(r).dump(2) << "\n";
    else if (c.format == "latex") o << render_latex(r);
    else o << render_text(r);
    if (!r.ok()) {
      for (const auto& p : r.problems) err << "theorem-violation: " << p << "\n";
      return kExitMath;
    }
    return kExitOk;
  });
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&](std::ostream& o) {
    require_format(c, {"text", "json"});
    VerifyOptions opts;
    opts.suite = c.suite;
    opts.seed = c.seed;
    opts.max_d = c.max_d;
    opts.order = c.order;
    opts.cusp_file = c.file;
    std::vector<CheckResult> results = run_verify(opts);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    if (c.format == "json") {
      Json j = Json::object();
      j["suite"] = c.suite;
      j["seed"] = c.seed;
      Json rs = Json::array();
      for (const auto& r : results) {
        Json e = Json::object();
        e["suite"] = r.suite;
        e["check"] = r.check;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        rs.push_back(std::move(e));
      }
      j["results"] = std::move(rs);
      j["passed"] = results.size() - failed;
      j["failed"] = failed;
      o << j.dump(2) << "\n";
    } else {
      std::size_t w_suite = 0, w_check = 0;
      for (const auto& r : results) {
        w_suite = std::max(w_suite, r.suite.size());
        w_check = std::max(w_check, r.check.size());
      }
      for (const auto& r : results)
        o << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w_suite) + 2) << r.suite
          << std::setw(static_cast<int>(w_check) + 2) << r.check << r.detail << "\n";
      o << "summary: " << results.size() - failed << " passed, " << failed << " failed (seed " << c.seed << ")\n";
    }
    return failed == 0 ? kExitOk : kExitMath;
  });
}

int cmd_resolution(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&](std::ostream& o) {
    require_format(c, {"text", "json", "latex"});
    if (c.file.empty()) fail(ErrorKind::invalid_argument, "resolution needs --file");
    ResolutionDatum d = datum_from_json(read_json_file(c.file));
    RationalProgression z = zeta_equivariant(d);
    PhiResult r = phi_of_datum(d);
    if (c.format == "json") {
      Json j = Json::object();
      j["dim"] = d.dim;
      j["components"] = d.components.size();
      j["zeta"] = progression_to_json(z);
      j["phi_infinity"] = motive_to_json(r.via_infinity);
      j["phi_closed_form"] = motive_to_json(r.closed_form);
      j["phi"] = r.closed_form.to_string();
      j["phi_pretty"] = render_mu_basis(r.closed_form);
      j["chi"] = r.chi.fits_slong_p() ? Json(r.chi.get_si()) : Json(r.chi.get_str());
      j["routes_consistent"] = true;
      o << j.dump(2) << "\n";
    } else if (c.format == "latex") {
      o << "\\varphi = " << render_mu_basis_latex(r.closed_form) << "\n";
    } else {
      o << "dim: " << d.dim << ", components: " << d.components.size() << "\n";
      o << "zeta terms, a_I prod x/(1-x) with x = q^(-nu) T^m:\n";
      for (const auto& t : zeta_terms(d)) {
        std::string ids;
        for (long id : t.ids) ids += (ids.empty() ? "" : ",") + (id == 0 ? std::string("*") : std::to_string(id));
        o << "  I = {" << ids << "}: a = " << t.coefficient.to_string() << ";";
        for (const auto& [nu, m] : t.factors) o << " (nu=" << nu << ",m=" << m << ")";
        o << "\n";
      }
      o << "zeta: " << z.to_string() << "\n";
      o << "phi via value at infinity: " << r.via_infinity.to_string() << "\n";
      o << "phi via closed form: " << r.closed_form.to_string() << "\n";
      o << "phi = " << render_mu_basis(r.closed_form) << "\n";
      o << "chi = " << r.chi.get_str() << "\n";
    }
    return kExitOk;
  });
}

int cmd_sym(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&](std::ostream& o) {
    require_format(c, {"text", "json"});
    if (c.file.empty()) fail(ErrorKind::invalid_argument, "sym needs --file");
    Series in = series_from_json(read_json_file(c.file));
    if (c.order_given) {
      Series s(in.arity(), c.order);
      for (const auto& [v, x] : in.coeffs()) s.set(v, x);
      in = s;
    }
    Series result = c.inverse ? plog(in) : sym(in);
    if (c.format == "json") o << series_to_json(result).dump(2) << "\n";
    else o << result.to_string() << "\n";
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Motivic DT invariants of the one-loop quiver with potential"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json", "latex"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", c.order, "truncation order (default 8, or MOTDT_ORDER)")->check(CLI::Range(0, 32));
    sub->add_option("--format", c.format, "text, json or latex")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out, "write the result to this file");
  };
  CLI::App* dt = app.add_subcommand("dt", "DT invariants of a potential W(t)");
  common(dt);
  dt->add_option("--potential", c.potential, "W as a polynomial in t, e.g. \"t^4/4 - t^2/2\"")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  common(verify);
  verify->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--max-d", c.max_d, "largest d for the wall-crossing suite")->check(CLI::Range(2L, 32L));
  verify->add_option("--file", c.file, "cusp datum for the resolution suite");

  CLI::App* resolution = app.add_subcommand("resolution", "vanishing cycle from an embedded resolution datum");
  common(resolution);
  resolution->add_option("--file", c.file, "datum file")->required();

  CLI::App* symc = app.add_subcommand("sym", "apply Sym, or PLog with --inverse, to a series file");
  common(symc);
  symc->add_option("--file", c.file, "series file")->required();
  symc->add_flag("--inverse", c.inverse, "apply PLog instead of Sym");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.subcommand = chosen->get_name();
  c.order_given = chosen->count("--order") > 0;
  if (!c.order_given) {
    if (const char* env = std::getenv("MOTDT_ORDER")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (*env == '\0' || *end != '\0' || v < 0 || v > 32) {
        err << "error: MOTDT_ORDER must be an integer in 0..32\n";
        return kExitInput;
      }
      c.order = static_cast<int>(v);
      c.order_given = true;
    }
  }
  if (c.subcommand == "dt") return cmd_dt(c, out, err);
  if (c.subcommand == "verify") return cmd_verify(c, out, err);
  if (c.subcommand == "resolution") return cmd_resolution(c, out, err);
  return cmd_sym(c, out, err);
}

}  // namespace motdt
