#pragma once

#include <string>

#include <json.hpp>

#include "motdt/progression.hpp"
#include "motdt/quiver.hpp"
#include "motdt/resolution.hpp"
#include "motdt/series.hpp"

namespace motdt {

using Json = nlohmann::ordered_json;

// A qexpr is either a list of [coeff, exp_num, exp_den] triples or an
// object {"num": triples, "den": [[n, e], ...]} standing for
// num / prod (q^n - 1)^e. Coefficients outside the int64 range are
// written as decimal strings. Readers throw schema-violation.
Json motive_to_json(const MonodromicMotive& m);
MonodromicMotive motive_from_json(const Json& j, const std::string& where = "qexpr");
Json fraction_to_json(const MotiveFraction& f);
MotiveFraction fraction_from_json(const Json& j, const std::string& where = "qexpr");

// {arity, order, coeffs: [{degree, value}]}
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

// {dim, components: [{id, m, nu}], x0, strata: [{I, E, F1}]}
Json datum_to_json(const ResolutionDatum& d);
ResolutionDatum datum_from_json(const Json& j);

// {summands: [{a, b, r, coeffs: [qexpr]}]}
Json progression_to_json(const RationalProgression& p);

// {potential, derivative, groups: [{factor, g, d, omega_q, omega_pretty,
// omega_latex, chi}], order_checked, routes_consistent, ...}
Json report_to_json(const DTReport& r);

// Parse text, mapping parser errors to schema-violation.
Json parse_json_text(const std::string& text, const std::string& where);
Json read_json_file(const std::string& path);

}  // namespace motdt
