#pragma once

#include <map>
#include <string>
#include <vector>

#include "motdt/qpoly.hpp"
#include "motdt/series.hpp"

namespace motdt {

// Throws syntax-error, or unsupported-potential when deg W < 2.
QPoly parse_potential(const std::string& text);

struct CriticalGroup {
  QPoly factor;  // monic, irreducible over Q when the factorization is complete
  long g = 1;    // number of geometric critical points
  long d = 2;    // W' vanishes to order d - 1
};

struct CriticalData {
  QPoly derivative;
  std::vector<CriticalGroup> groups;
  bool factorization_complete = true;

  long point_count() const;
};

CriticalData critical_data(const QPoly& w);

// Sym((1 - [mu_d])/(L - 1) T)
Series local_series(long d, int order);

// Product of local series, one axis per geometric critical point. The
// points of group i sit on consecutive axes in group order.
Series global_series(const CriticalData& c, int order);

// (L^(1/2) - L^(-1/2)) PLog(Phi), nonzero entries only. Throws
// denominator-not-cleared when a coefficient leaves the variety ring.
std::map<DegreeVector, MonodromicMotive> extract_omega(const Series& phi);

// L^(-1/2)(1 - [mu_d])
MonodromicMotive expected_omega(long d);

struct WallcrossResult {
  bool consistent = true;
  std::string diff;  // first mismatch, empty when consistent
};

// local_series(d) against the solution of Phi(L T) = Phi(T) Sym((1 - [mu_d]) T).
WallcrossResult wallcross_check(long d, int order);

// chi(Omega_1) per group; theorem-violation unless it equals d - 1.
std::vector<long> milnor_table(const CriticalData& c);

struct GroupReport {
  std::string factor;
  long g = 1;
  long d = 2;
  MonodromicMotive omega;
  std::string omega_pretty;
  std::string omega_latex;
  Integer chi;
};

struct DTReport {
  std::string potential;
  std::string derivative;
  std::vector<GroupReport> groups;
  int order_checked = 0;
  bool routes_consistent = true;
  bool higher_vanish = true;
  bool omega_matches = true;
  bool factorization_complete = true;
  std::vector<std::string> problems;

  bool ok() const { return routes_consistent && higher_vanish && omega_matches; }
};

// Largest number of geometric critical points the multivariate check accepts.
inline constexpr long kMaxCriticalPoints = 8;

DTReport run_dt(const std::string& potential, int order);

std::string render_text(const DTReport& r);
std::string render_latex(const DTReport& r);

}  // namespace motdt
