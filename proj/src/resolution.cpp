#include "motdt/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "motdt/classes.hpp"
#include "motdt/error.hpp"

namespace motdt {

namespace {

std::map<std::vector<long>, const Stratum*> index_strata(const ResolutionDatum& datum) {
  std::map<std::vector<long>, const Stratum*> out;
  for (const auto& s : datum.strata) {
    std::vector<long> key = s.ids;
    std::sort(key.begin(), key.end());
    if (!out.emplace(key, &s).second) fail(ErrorKind::invalid_argument, "stratum listed twice");
  }
  return out;
}

}  // namespace

void validate(const ResolutionDatum& datum) {
  if (datum.dim < 1) fail(ErrorKind::invalid_argument, "ambient dimension must be >= 1");
  if (datum.components.empty()) fail(ErrorKind::invalid_argument, "resolution datum has no components");
  if (datum.components.size() > 16) fail(ErrorKind::invalid_argument, "more than 16 components");
  std::set<long> ids;
  for (const auto& c : datum.components) {
    if (c.id < 1) fail(ErrorKind::invalid_argument, "component ids must be >= 1");
    if (c.m < 1 || c.nu < 1) fail(ErrorKind::invalid_argument, "component needs m >= 1 and nu >= 1");
    if (!ids.insert(c.id).second) fail(ErrorKind::invalid_argument, "duplicate component id");
  }
  auto strata = index_strata(datum);
  for (const auto& [key, s] : strata)
    for (long id : key)
      if (!ids.count(id)) fail(ErrorKind::invalid_argument, "stratum mentions unknown component " + std::to_string(id));
  const std::size_t n = datum.components.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<long> key;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) key.push_back(datum.components[i].id);
    std::sort(key.begin(), key.end());
    if (!strata.count(key)) {
      std::string name;
      for (long id : key) name += (name.empty() ? "" : ",") + std::to_string(id);
      fail(ErrorKind::datum_incomplete, "missing stratum {" + name + "}");
    }
  }
}

std::vector<ZetaTerm> zeta_terms(const ResolutionDatum& datum) {
  validate(datum);
  auto strata = index_strata(datum);
  const std::size_t n = datum.components.size();
  const MonodromicMotive torus = lefschetz_minus_one();
  std::vector<ZetaTerm> out;
  auto push = [&](ZetaTerm t) {
    if (!t.coefficient.is_zero()) out.push_back(std::move(t));
  };
  push({{0}, datum.x0_class, {{0, 1}}});
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ZetaTerm t;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        t.ids.push_back(datum.components[i].id);
        t.factors.emplace_back(datum.components[i].nu, datum.components[i].m);
      }
    std::vector<long> key = t.ids;
    std::sort(key.begin(), key.end());
    const Stratum& s = *strata.at(key);
    MonodromicMotive n_class = s.e_class * torus.pow(key.size());
    ZetaTerm with_star = t;
    t.coefficient = -n_class - s.f1_class;
    with_star.ids.push_back(0);
    with_star.factors.emplace_back(0, 1);
    with_star.coefficient = -n_class;
    push(std::move(t));
    push(std::move(with_star));
  }
  return out;
}

RationalProgression zeta_equivariant(const ResolutionDatum& datum) {
  RationalProgression total;
  for (const auto& t : zeta_terms(datum)) total += from_product_form(MotiveFraction(t.coefficient), t.factors);
  return total;
}

PhiResult phi_of_datum(const ResolutionDatum& datum) {
  RationalProgression z = zeta_equivariant(datum);
  MotiveFraction at_inf = eval_infinity(z);
  auto value = at_inf.as_motive();
  if (!value) fail(ErrorKind::internal_inconsistency, "zeta function value at infinity has a denominator");
  MonodromicMotive scale = make_tate(-datum.dim);
  PhiResult r;
  r.via_infinity = -(*value) * scale;

  auto strata = index_strata(datum);
  MonodromicMotive sum = datum.x0_class;
  for (const auto& [key, s] : strata) {
    if (key.size() % 2 == 1) sum -= s->f1_class;
    else sum += s->f1_class;
  }
  r.closed_form = sum * scale;
  if (r.via_infinity != r.closed_form)
    fail(ErrorKind::internal_inconsistency, "value at infinity " + r.via_infinity.to_string() +
                                                " differs from closed form " + r.closed_form.to_string());
  r.chi = euler_char(r.closed_form);
  return r;
}

MonodromicMotive phi_of_zero_function(long dim, const MonodromicMotive& x_class) {
  if (dim < 0) fail(ErrorKind::invalid_argument, "dimension must be >= 0");
  return make_tate(-dim) * x_class;
}

MonodromicMotive equivariant_integral(long dim, const MonodromicMotive& class0, const MonodromicMotive& class1) {
  if (dim < 0) fail(ErrorKind::invalid_argument, "dimension must be >= 0");
  return make_tate(-dim) * (class0 - class1);
}

MonodromicMotive thom_sebastiani(long a, long b) {
  if (a < 2 || b < 2) fail(ErrorKind::invalid_argument, "thom_sebastiani needs exponents >= 2");
  MonodromicMotive one(1);
  return make_tate(-2) * (one - make_mu(a)) * (one - make_mu(b));
}

ResolutionDatum zd_datum(long d) {
  if (d < 1) fail(ErrorKind::invalid_argument, "z^d datum needs d >= 1");
  ResolutionDatum datum;
  datum.dim = 1;
  datum.components.push_back({1, d, 1});
  datum.x0_class = MonodromicMotive(1);
  datum.strata.push_back({{1}, MonodromicMotive(1), make_mu(d)});
  return datum;
}

}  // namespace motdt
