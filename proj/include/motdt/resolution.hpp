#pragma once

#include <vector>

#include "motdt/progression.hpp"

namespace motdt {

struct ResolutionComponent {
  long id = 0;
  long m = 1;   // multiplicity of f along the component
  long nu = 1;  // discrepancy + 1
};

// Classes already integrated over X_0 down to a point.
struct Stratum {
  std::vector<long> ids;
  MonodromicMotive e_class;   // [E_I open stratum]
  MonodromicMotive f1_class;  // [f_I^-1(1)]
};

struct ResolutionDatum {
  long dim = 1;
  std::vector<ResolutionComponent> components;
  MonodromicMotive x0_class;
  std::vector<Stratum> strata;
};

// Throws datum-incomplete or invalid-argument.
void validate(const ResolutionDatum& datum);

// a_I * prod over I of x_i/(1 - x_i), x_i = q^(-nu_i) T^(m_i).
struct ZetaTerm {
  std::vector<long> ids;  // 0 marks the auxiliary index
  MonodromicMotive coefficient;
  std::vector<std::pair<long, long>> factors;  // (nu, m)
};

// Nonzero terms only.
std::vector<ZetaTerm> zeta_terms(const ResolutionDatum& datum);

// L^(d/2) Z(L^(-d/2) T) as the sum over nonempty subsets of J plus the
// auxiliary index with m = 1, nu = 0.
RationalProgression zeta_equivariant(const ResolutionDatum& datum);

struct PhiResult {
  MonodromicMotive via_infinity;
  MonodromicMotive closed_form;
  Integer chi;
};

// Both routes; internal-inconsistency if they differ.
PhiResult phi_of_datum(const ResolutionDatum& datum);

// phi of the zero function on X: L^(-dim/2) [X].
MonodromicMotive phi_of_zero_function(long dim, const MonodromicMotive& x_class);

// L^(-dim/2) (class0 - class1)
MonodromicMotive equivariant_integral(long dim, const MonodromicMotive& class0, const MonodromicMotive& class1);

// Vanishing cycle of x^a + y^b on the plane.
MonodromicMotive thom_sebastiani(long a, long b);

// One component of multiplicity d, discrepancy 1, fiber [mu_d].
ResolutionDatum zd_datum(long d);

}  // namespace motdt
