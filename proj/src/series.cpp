#include "motdt/series.hpp"

#include <algorithm>
#include <numeric>

#include "motdt/error.hpp"
#include "motdt/lambda.hpp"

namespace motdt {

namespace {

void vectors_rec(int arity, int pos, int left, DegreeVector& cur, std::vector<DegreeVector>& out) {
  if (pos == arity - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[pos] = k;
    vectors_rec(arity, pos + 1, left - k, cur, out);
  }
}

void same_arity(const Series& a, const Series& b) {
  if (a.arity() != b.arity()) fail(ErrorKind::invalid_argument, "series arities differ");
}

DegreeVector plus(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Multiplies acc by sum_k factor[k] T^(k v) in place, respecting the order.
void multiply_by_power_series(Series& acc, const DegreeVector& v, const SigmaVector& factor) {
  int dv = total_degree(v);
  Series next(acc.arity(), acc.order());
  for (const auto& [w, c] : acc.coeffs()) {
    DegreeVector pos = w;
    for (int k = 0; total_degree(w) + k * dv <= acc.order() && k < static_cast<int>(factor.size()); ++k) {
      if (k > 0) pos = plus(pos, v);
      if (factor[k].is_zero()) continue;
      next.add(pos, c * factor[k]);
    }
  }
  acc = std::move(next);
}

}  // namespace

int total_degree(const DegreeVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<DegreeVector> degree_vectors(int arity, int n) {
  if (arity < 1 || n < 0) fail(ErrorKind::invalid_argument, "bad degree-vector request");
  std::vector<DegreeVector> out;
  DegreeVector cur(arity, 0);
  vectors_rec(arity, 0, n, cur, out);
  return out;
}

Series::Series(int arity, int order) : arity_(arity), order_(order) {
  if (arity < 1) fail(ErrorKind::invalid_argument, "series arity must be >= 1");
  if (order < 0) fail(ErrorKind::invalid_argument, "series order must be >= 0");
}

Series Series::one(int arity, int order) {
  Series s(arity, order);
  s.set(DegreeVector(arity, 0), MotiveFraction(1));
  return s;
}

Series Series::monomial(int arity, int order, const DegreeVector& v, const MotiveFraction& c) {
  Series s(arity, order);
  s.set(v, c);
  return s;
}

void Series::check(const DegreeVector& v) const {
  if (static_cast<int>(v.size()) != arity_) fail(ErrorKind::invalid_argument, "degree vector has wrong arity");
  for (int x : v)
    if (x < 0) fail(ErrorKind::invalid_argument, "negative degree");
}

MotiveFraction Series::coeff(const DegreeVector& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? MotiveFraction() : it->second;
}

MotiveFraction Series::constant_term() const { return coeff(DegreeVector(arity_, 0)); }

void Series::set(const DegreeVector& v, const MotiveFraction& c) {
  check(v);
  if (total_degree(v) > order_) return;
  if (c.is_zero()) coeffs_.erase(v);
  else coeffs_[v] = c;
}

void Series::add(const DegreeVector& v, const MotiveFraction& c) {
  check(v);
  if (total_degree(v) > order_ || c.is_zero()) return;
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) {
    coeffs_.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Series& Series::operator+=(const Series& o) {
  same_arity(*this, o);
  order_ = std::min(order_, o.order_);
  *this = truncated(order_);
  for (const auto& [v, c] : o.coeffs_) add(v, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  same_arity(*this, o);
  order_ = std::min(order_, o.order_);
  *this = truncated(order_);
  for (const auto& [v, c] : o.coeffs_) add(v, -c);
  return *this;
}

bool operator==(const Series& a, const Series& b) {
  if (a.arity_ != b.arity_ || a.order_ != b.order_) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [v, c] : a.coeffs_) {
    auto it = b.coeffs_.find(v);
    if (it == b.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

Series Series::truncated(int order) const {
  Series s(arity_, std::min(order, order_));
  for (const auto& [v, c] : coeffs_) s.set(v, c);
  return s;
}

std::string Series::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<DegreeVector> keys;
  for (const auto& kv : coeffs_) keys.push_back(kv.first);
  std::stable_sort(keys.begin(), keys.end(), [](const DegreeVector& a, const DegreeVector& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  std::string s;
  bool first = true;
  for (const auto& v : keys) {
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      if (v[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += arity_ == 1 ? "T" : "T" + std::to_string(i + 1);
      if (v[i] > 1) mono += "^" + std::to_string(v[i]);
    }
    std::string c = coeffs_.at(v).to_string();
    bool negative = !c.empty() && c[0] == '-' && c.find_first_of(" /", 1) == std::string::npos;
    if (negative) c = c.substr(1);
    if (!first) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    bool plain = c.find_first_of(" /") == std::string::npos;
    if (mono.empty()) s += c;
    else if (c == "1") s += mono;
    else s += (plain ? c : "(" + c + ")") + "*" + mono;
    first = false;
  }
  return s;
}

Series sym(const Series& a) {
  if (!a.in_f1()) fail(ErrorKind::not_in_f1, "Sym needs a series without constant term");
  Series acc = Series::one(a.arity(), a.order());
  for (const auto& [v, c] : a.coeffs()) {
    int dv = total_degree(v);
    // sigma^k of the degree-v coefficient lands in degree k v.
    SigmaVector s = sigma_vector(c, a.order() / dv);
    multiply_by_power_series(acc, v, s);
  }
  return acc;
}

Series plog(const Series& b) {
  if (!b.constant_term().is_one()) fail(ErrorKind::not_invertible, "PLog needs constant term 1");
  const int r = b.arity();
  const int order = b.order();
  Series a(r, order);
  Series p = Series::one(r, order);
  for (int n = 1; n <= order; ++n) {
    std::vector<std::pair<DegreeVector, MotiveFraction>> level;
    for (const auto& v : degree_vectors(r, n)) {
      MotiveFraction c = b.coeff(v) - p.coeff(v);
      if (!c.is_zero()) level.emplace_back(v, c);
    }
    for (const auto& [v, c] : level) {
      a.set(v, c);
      multiply_by_power_series(p, v, sigma_vector(c, order / n));
    }
  }
  return a;
}

Series tate_scale(const Series& a, int axis, long m) {
  if (axis < 0 || axis >= a.arity()) fail(ErrorKind::invalid_argument, "axis out of range");
  Series s(a.arity(), a.order());
  for (const auto& [v, c] : a.coeffs()) s.set(v, c.shifted(Rational(m * v[axis])));
  return s;
}

Series mul(const Series& a, const Series& b) {
  same_arity(a, b);
  Series s(a.arity(), std::min(a.order(), b.order()));
  for (const auto& [v, x] : a.coeffs())
    for (const auto& [w, y] : b.coeffs())
      if (total_degree(v) + total_degree(w) <= s.order()) s.add(plus(v, w), x * y);
  return s;
}

Series ratio(const Series& a, const Series& b) {
  same_arity(a, b);
  auto inv0 = b.constant_term().inverse();
  if (!inv0) fail(ErrorKind::division_error, "constant term " + b.constant_term().to_string() + " is not invertible");
  const int r = a.arity();
  Series c(r, std::min(a.order(), b.order()));
  for (int n = 0; n <= c.order(); ++n) {
    for (const auto& v : degree_vectors(r, n)) {
      MotiveFraction acc = a.coeff(v);
      for (const auto& [w, y] : b.coeffs()) {
        int dw = total_degree(w);
        if (dw == 0 || dw > n) continue;
        DegreeVector rest(r);
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
          rest[i] = v[i] - w[i];
          ok = rest[i] >= 0;
        }
        if (!ok) continue;
        MotiveFraction cr = c.coeff(rest);
        if (!cr.is_zero()) acc -= y * cr;
      }
      if (!acc.is_zero()) c.set(v, acc * *inv0);
    }
  }
  return c;
}

Series solve_twist_equation(const Series& s) {
  if (s.arity() != 1) fail(ErrorKind::invalid_argument, "twist equation is univariate");
  if (!s.constant_term().is_one()) fail(ErrorKind::not_invertible, "twist equation needs S(0) = 1");
  Series phi = Series::one(1, s.order());
  std::vector<MotiveFraction> p(s.order() + 1);
  p[0] = MotiveFraction(1);
  for (int n = 1; n <= s.order(); ++n) {
    MotiveFraction acc;
    for (int k = 1; k <= n; ++k) {
      MotiveFraction sk = s.coeff({k});
      if (!sk.is_zero() && !p[n - k].is_zero()) acc += p[n - k] * sk;
    }
    p[n] = acc.divided_by(cyclotomic_unit(n));
    phi.set({n}, p[n]);
  }
  return phi;
}

Series collapse(const Series& a) {
  Series s(1, a.order());
  for (const auto& [v, c] : a.coeffs()) s.add({total_degree(v)}, c);
  return s;
}

Series on_axis(const Series& a, int arity, int axis) {
  if (a.arity() != 1) fail(ErrorKind::invalid_argument, "on_axis takes a univariate series");
  if (axis < 0 || axis >= arity) fail(ErrorKind::invalid_argument, "axis out of range");
  Series s(arity, a.order());
  for (const auto& [v, c] : a.coeffs()) {
    DegreeVector w(arity, 0);
    w[axis] = v[0];
    s.set(w, c);
  }
  return s;
}

}  // namespace motdt
