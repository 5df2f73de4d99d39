#include "motdt/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "motdt/error.hpp"

namespace motdt {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::schema_violation, where + ": " + what);
}

Json integer_to_json(const Integer& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    bool ok = !s.empty();
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
    if (ok) return Integer(s);
  }
  bad(where, "expected an integer");
}

long long_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  if (j.is_number_unsigned() && j.get<unsigned long>() > static_cast<unsigned long>(std::numeric_limits<long>::max()))
    bad(where, "integer out of range");
  return j.get<long>();
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

void only_fields(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) bad(where, "unknown field '" + it.key() + "'");
  }
}

Json triples(const MonodromicMotive& m) {
  Json out = Json::array();
  for (const auto& t : m.terms()) {
    Json e = Json::array();
    e.push_back(integer_to_json(t.coeff));
    e.push_back(integer_to_json(t.exponent.get_num()));
    e.push_back(integer_to_json(t.exponent.get_den()));
    out.push_back(std::move(e));
  }
  return out;
}

MonodromicMotive triples_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of [coeff, exp_num, exp_den]");
  std::vector<MonodromicMotive::Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 3) bad(w, "expected [coeff, exp_num, exp_den]");
    Integer c = integer_from_json(e[0], w);
    Integer num = integer_from_json(e[1], w);
    Integer den = integer_from_json(e[2], w);
    if (den <= 0) bad(w, "exponent denominator must be positive");
    if (gcd(num, den) != 1 && num != 0) bad(w, "exponent must be a reduced fraction");
    if (num == 0 && den != 1) bad(w, "exponent must be a reduced fraction");
    terms.push_back({Rational(num, den), c});
  }
  return MonodromicMotive::from_terms(std::move(terms));
}

}  // namespace

Json motive_to_json(const MonodromicMotive& m) { return triples(m); }

MonodromicMotive motive_from_json(const Json& j, const std::string& where) {
  MotiveFraction f = fraction_from_json(j, where);
  auto m = f.as_motive();
  if (!m) bad(where, "expected a denominator-free expression");
  return *m;
}

Json fraction_to_json(const MotiveFraction& f) {
  Json out = Json::object();
  out["num"] = triples(f.numerator());
  Json den = Json::array();
  for (const auto& [n, e] : f.denominator().factors) den.push_back(Json::array({n, e}));
  out["den"] = std::move(den);
  return out;
}

MotiveFraction fraction_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) return MotiveFraction(triples_from_json(j, where));
  if (!j.is_object()) bad(where, "expected a qexpr");
  only_fields(j, {"num", "den"}, where);
  MonodromicMotive num = triples_from_json(field(j, "num", where), where + ".num");
  TateUnit unit;
  if (j.contains("den")) {
    const Json& den = j["den"];
    if (!den.is_array()) bad(where + ".den", "expected a list of [n, e]");
    for (std::size_t i = 0; i < den.size(); ++i) {
      const std::string w = where + ".den[" + std::to_string(i) + "]";
      if (!den[i].is_array() || den[i].size() != 2) bad(w, "expected [n, e]");
      long n = long_from_json(den[i][0], w);
      long e = long_from_json(den[i][1], w);
      if (n < 1 || e < 0 || n > 4096 || e > 4096) bad(w, "factor out of range");
      if (e > 0) unit.factors[n] += e;
    }
  }
  return MotiveFraction(std::move(num), unit);
}

Json series_to_json(const Series& s) {
  Json out = Json::object();
  out["arity"] = s.arity();
  out["order"] = s.order();
  Json coeffs = Json::array();
  for (const auto& [v, c] : s.coeffs()) {
    Json e = Json::object();
    e["degree"] = v;
    e["value"] = fraction_to_json(c);
    coeffs.push_back(std::move(e));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

Series series_from_json(const Json& j) {
  const std::string where = "series";
  if (!j.is_object()) bad(where, "expected an object");
  only_fields(j, {"arity", "order", "coeffs"}, where);
  long arity = long_from_json(field(j, "arity", where), where + ".arity");
  long order = long_from_json(field(j, "order", where), where + ".order");
  if (arity < 1 || arity > 16) bad(where + ".arity", "must be in 1..16");
  if (order < 0 || order > 64) bad(where + ".order", "must be in 0..64");
  Series s(static_cast<int>(arity), static_cast<int>(order));
  const Json& coeffs = field(j, "coeffs", where);
  if (!coeffs.is_array()) bad(where + ".coeffs", "expected a list");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string w = where + ".coeffs[" + std::to_string(i) + "]";
    const Json& e = coeffs[i];
    if (!e.is_object()) bad(w, "expected an object");
    only_fields(e, {"degree", "value"}, w);
    const Json& deg = field(e, "degree", w);
    if (!deg.is_array() || deg.size() != static_cast<std::size_t>(arity)) bad(w + ".degree", "length must equal arity");
    DegreeVector v;
    for (const auto& x : deg) {
      long k = long_from_json(x, w + ".degree");
      if (k < 0 || k > 64) bad(w + ".degree", "entries must be in 0..64");
      v.push_back(static_cast<int>(k));
    }
    s.add(v, fraction_from_json(field(e, "value", w), w + ".value"));
  }
  return s;
}

Json datum_to_json(const ResolutionDatum& d) {
  Json out = Json::object();
  out["dim"] = d.dim;
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json e = Json::object();
    e["id"] = c.id;
    e["m"] = c.m;
    e["nu"] = c.nu;
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  out["x0"] = motive_to_json(d.x0_class);
  Json strata = Json::array();
  for (const auto& s : d.strata) {
    Json e = Json::object();
    e["I"] = s.ids;
    e["E"] = motive_to_json(s.e_class);
    e["F1"] = motive_to_json(s.f1_class);
    strata.push_back(std::move(e));
  }
  out["strata"] = std::move(strata);
  return out;
}

ResolutionDatum datum_from_json(const Json& j) {
  const std::string where = "datum";
  if (!j.is_object()) bad(where, "expected an object");
  only_fields(j, {"dim", "components", "x0", "strata"}, where);
  ResolutionDatum d;
  d.dim = long_from_json(field(j, "dim", where), where + ".dim");
  const Json& comps = field(j, "components", where);
  if (!comps.is_array()) bad(where + ".components", "expected a list");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string w = where + ".components[" + std::to_string(i) + "]";
    only_fields(comps[i], {"id", "m", "nu"}, w);
    d.components.push_back({long_from_json(field(comps[i], "id", w), w + ".id"),
                            long_from_json(field(comps[i], "m", w), w + ".m"),
                            long_from_json(field(comps[i], "nu", w), w + ".nu")});
  }
  d.x0_class = motive_from_json(field(j, "x0", where), where + ".x0");
  const Json& strata = field(j, "strata", where);
  if (!strata.is_array()) bad(where + ".strata", "expected a list");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string w = where + ".strata[" + std::to_string(i) + "]";
    only_fields(strata[i], {"I", "E", "F1"}, w);
    Stratum s;
    const Json& ids = field(strata[i], "I", w);
    if (!ids.is_array() || ids.empty()) bad(w + ".I", "expected a nonempty list of ids");
    for (const auto& x : ids) s.ids.push_back(long_from_json(x, w + ".I"));
    s.e_class = motive_from_json(field(strata[i], "E", w), w + ".E");
    s.f1_class = motive_from_json(field(strata[i], "F1", w), w + ".F1");
    d.strata.push_back(std::move(s));
  }
  return d;
}

Json progression_to_json(const RationalProgression& p) {
  Json summands = Json::array();
  for (const auto& s : p.summands()) {
    Json e = Json::object();
    e["a"] = s.a;
    e["b"] = s.b;
    e["r"] = s.r;
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(fraction_to_json(c));
    e["coeffs"] = std::move(coeffs);
    summands.push_back(std::move(e));
  }
  Json out = Json::object();
  out["summands"] = std::move(summands);
  return out;
}

Json report_to_json(const DTReport& r) {
  Json out = Json::object();
  out["potential"] = r.potential;
  out["derivative"] = r.derivative;
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json e = Json::object();
    e["factor"] = g.factor;
    e["g"] = g.g;
    e["d"] = g.d;
    e["omega_q"] = motive_to_json(g.omega);
    e["omega_pretty"] = g.omega_pretty;
    e["omega_latex"] = g.omega_latex;
    e["chi"] = integer_to_json(g.chi);
    groups.push_back(std::move(e));
  }
  out["groups"] = std::move(groups);
  out["order_checked"] = r.order_checked;
  out["routes_consistent"] = r.routes_consistent;
  out["higher_omega_vanish"] = r.higher_vanish;
  out["omega_matches"] = r.omega_matches;
  out["factorization_complete"] = r.factorization_complete;
  out["problems"] = r.problems;
  return out;
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(where, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace motdt
