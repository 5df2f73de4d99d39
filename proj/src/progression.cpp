#include "motdt/progression.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "motdt/error.hpp"
#include "motdt/lambda.hpp"

namespace motdt {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

MotiveFraction q_power(long e) { return MotiveFraction(MonodromicMotive::monomial(Rational(e))); }

void trim(std::vector<MotiveFraction>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Values G(m) for m = 0..deg of a polynomial given pointwise.
template <class Fn>
std::vector<MotiveFraction> sample(int deg, Fn fn) {
  std::vector<MotiveFraction> v;
  v.reserve(deg + 1);
  for (int m = 0; m <= deg; ++m) v.push_back(fn(m));
  return v;
}

// Moves r into [0, b): F(m) -> q^(a s) F(m - s) with r = b s + r0.
ProgressionSummand canonical(ProgressionSummand s) {
  long shift = floor_div(s.r, s.b);
  if (shift == 0 || s.coeffs.empty()) {
    s.r = floor_mod(s.r, s.b);
    return s;
  }
  MotiveFraction factor = q_power(s.a * shift);
  ProgressionSummand out{s.a, s.b, s.r - s.b * shift, {}};
  out.coeffs = interpolate_binomial(sample(s.degree(), [&](int m) { return factor * s.value_at(m - shift); }));
  return out;
}

using SummandKey = std::tuple<long, long, long>;  // (b, r, a)

// Truncated power series in V.
using VSeries = std::vector<MotiveFraction>;

VSeries vmul(const VSeries& x, const VSeries& y, int len) {
  VSeries z(len);
  for (int i = 0; i < len && i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j < len && j < static_cast<int>(y.size()); ++j)
      if (!y[j].is_zero()) z[i + j] += x[i] * y[j];
  }
  return z;
}

// 1 / (1 - q^k)
MotiveFraction inverse_one_minus_q(long k) {
  if (k == 0) fail(ErrorKind::division_error, "1 - q^0 is not invertible");
  if (k > 0) return MotiveFraction(MonodromicMotive(-1), cyclotomic_unit(k));
  return MotiveFraction(MonodromicMotive::monomial(Rational(-k)), cyclotomic_unit(-k));
}

}  // namespace

MotiveFraction ProgressionSummand::value_at(long m) const {
  MotiveFraction v;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l].is_zero()) continue;
    Integer c = binomial(Integer(m + static_cast<long>(l)), l);
    if (c != 0) v += coeffs[l] * MotiveFraction(c);
  }
  return v;
}

std::vector<MotiveFraction> interpolate_binomial(const std::vector<MotiveFraction>& values) {
  const int n = static_cast<int>(values.size());
  // Forward differences at 0 give the basis C(m, j).
  std::vector<MotiveFraction> diff(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (values[i].is_zero()) continue;
      Integer c = binomial(Integer(j), i);
      if ((j - i) % 2 == 1) c = -c;
      diff[j] += values[i] * MotiveFraction(c);
    }
  // C(m, j) = sum_l (-1)^(j-l) C(j, l) C(m + l, l)
  std::vector<MotiveFraction> out(n);
  for (int j = 0; j < n; ++j) {
    if (diff[j].is_zero()) continue;
    for (int l = 0; l <= j; ++l) {
      Integer c = binomial(Integer(j), l);
      if ((j - l) % 2 == 1) c = -c;
      out[l] += diff[j] * MotiveFraction(c);
    }
  }
  trim(out);
  return out;
}

RationalProgression RationalProgression::from_summands(std::vector<ProgressionSummand> summands) {
  std::map<SummandKey, std::vector<MotiveFraction>> merged;
  for (auto& s : summands) {
    if (s.b <= 0) fail(ErrorKind::invalid_argument, "progression step must be positive");
    trim(s.coeffs);
    if (s.coeffs.empty()) continue;
    ProgressionSummand c = canonical(std::move(s));
    auto& slot = merged[{c.b, c.r, c.a}];
    if (slot.size() < c.coeffs.size()) slot.resize(c.coeffs.size());
    for (std::size_t l = 0; l < c.coeffs.size(); ++l) slot[l] += c.coeffs[l];
  }
  RationalProgression p;
  for (auto& [key, coeffs] : merged) {
    trim(coeffs);
    if (coeffs.empty()) continue;
    if (static_cast<int>(coeffs.size()) - 1 > kMaxProgressionDegree)
      fail(ErrorKind::invalid_argument, "progression polynomial degree exceeds 8");
    auto [b, r, a] = key;
    p.summands_.push_back({a, b, r, std::move(coeffs)});
  }
  return p;
}

RationalProgression RationalProgression::unit() { return from_summands({{0, 1, 0, {MotiveFraction(1)}}}); }

MotiveFraction RationalProgression::coefficient(long k) const {
  MotiveFraction v;
  for (const auto& s : summands_) {
    if (floor_mod(k - s.r, s.b) != 0) continue;
    long m = (k - s.r) / s.b;
    v += s.value_at(m) * q_power(-s.a * m);
  }
  return v;
}

long RationalProgression::period() const {
  long p = 1;
  for (const auto& s : summands_) p = std::lcm(p, s.b);
  return p;
}

RationalProgression RationalProgression::refined(long period) const {
  std::vector<ProgressionSummand> out;
  for (const auto& s : summands_) {
    if (period % s.b != 0) fail(ErrorKind::invalid_argument, "period must be a multiple of every step");
    long k = period / s.b;
    for (long i = 0; i < k; ++i) {
      MotiveFraction factor = q_power(-s.a * i);
      ProgressionSummand t{s.a * k, period, s.b * i + s.r, {}};
      t.coeffs = interpolate_binomial(sample(s.degree(), [&](int m) { return factor * s.value_at(k * m + i); }));
      out.push_back(std::move(t));
    }
  }
  return from_summands(std::move(out));
}

RationalProgression& RationalProgression::operator+=(const RationalProgression& o) {
  std::vector<ProgressionSummand> all = summands_;
  all.insert(all.end(), o.summands_.begin(), o.summands_.end());
  *this = from_summands(std::move(all));
  return *this;
}

RationalProgression RationalProgression::scaled(const MotiveFraction& c) const {
  std::vector<ProgressionSummand> out = summands_;
  for (auto& s : out)
    for (auto& x : s.coeffs) x = x * c;
  return from_summands(std::move(out));
}

bool operator==(const RationalProgression& x, const RationalProgression& y) {
  long p = std::lcm(x.period(), y.period());
  RationalProgression rx = x.refined(p), ry = y.refined(p);
  if (rx.summands_.size() != ry.summands_.size()) return false;
  for (std::size_t i = 0; i < rx.summands_.size(); ++i) {
    const auto& a = rx.summands_[i];
    const auto& b = ry.summands_[i];
    if (a.a != b.a || a.b != b.b || a.r != b.r || a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t l = 0; l < a.coeffs.size(); ++l)
      if (a.coeffs[l] != b.coeffs[l]) return false;
  }
  return true;
}

std::string RationalProgression::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& s : summands_) {
    if (!out.empty()) out += " + ";
    std::string f;
    for (std::size_t l = 0; l < s.coeffs.size(); ++l) {
      if (s.coeffs[l].is_zero()) continue;
      if (!f.empty()) f += " + ";
      f += "(" + s.coeffs[l].to_string() + ")";
      if (l > 0) f += "*C(m+" + std::to_string(l) + "," + std::to_string(l) + ")";
    }
    out += "sum_m [" + f + "]*q^(" + std::to_string(-s.a) + "*m)*T^(" + std::to_string(s.b) + "*m+" +
           std::to_string(s.r) + ")";
  }
  return out;
}

RationalProgression from_product_form(const MotiveFraction& g, const std::vector<std::pair<long, long>>& factors) {
  if (factors.empty()) fail(ErrorKind::invalid_argument, "product form needs at least one factor");
  long big = 1;
  for (const auto& [a, b] : factors) {
    if (b <= 0) fail(ErrorKind::invalid_argument, "factor exponent b must be positive");
    big = std::lcm(big, b);
  }
  if (g.is_zero()) return {};

  // x/(1-x) = (x + ... + x^K)/(1 - x^K) with x^K = q^(-aK) T^big.
  std::map<long, MonodromicMotive> num{{0, MonodromicMotive(1)}};
  std::map<long, int> poles;  // c -> order of the pole of 1/(1 - q^(-c) U)
  for (const auto& [a, b] : factors) {
    long k = big / b;
    std::map<long, MonodromicMotive> next;
    for (const auto& [e, c] : num)
      for (long j = 1; j <= k; ++j) next[e + b * j] += c * MonodromicMotive::monomial(Rational(-a * j));
    num = std::move(next);
    ++poles[a * k];
  }
  for (const auto& [c, e] : poles)
    if (e > kMaxProgressionDegree + 1) fail(ErrorKind::invalid_argument, "pole order exceeds the degree bound");

  std::vector<ProgressionSummand> out;
  for (long s = 0; s < big; ++s) {
    std::map<long, MonodromicMotive> ns;  // N_s(U) = sum_u n_u U^u
    for (const auto& [e, c] : num)
      if (floor_mod(e, big) == s && !c.is_zero()) ns[floor_div(e, big)] += c;
    if (ns.empty()) continue;
    for (const auto& [c, e] : poles) {
      // Local expansion in V = 1 - q^(-c) U, that is U = q^c (1 - V).
      VSeries g_v(e);
      for (const auto& [u, nu] : ns) {
        MonodromicMotive base = nu * MonodromicMotive::monomial(Rational(c * u));
        for (int j = 0; j < e && j <= u; ++j) {
          Integer bc = binomial(Integer(u), j);
          if (j % 2 == 1) bc = -bc;
          g_v[j] += MotiveFraction(base.scaled(bc));
        }
      }
      for (const auto& [c2, e2] : poles) {
        if (c2 == c) continue;
        // 1 - q^(-c2) U = (1 - q^k) + q^k V with k = c - c2.
        long k = c - c2;
        MotiveFraction inv_delta = inverse_one_minus_q(k);
        MotiveFraction ratio = -(q_power(k) * inv_delta);
        VSeries inv(e);
        MotiveFraction term = inv_delta;
        for (int j = 0; j < e; ++j) {
          inv[j] = term;
          term = term * ratio;
        }
        for (int t = 0; t < e2; ++t) g_v = vmul(g_v, inv, e);
      }
      ProgressionSummand summand{c, big, s, {}};
      summand.coeffs.resize(e);
      // beta_l / (1 - alpha U)^l with beta_l = [V^(e-l)] G expands to
      // beta_l C(m + l - 1, l - 1) alpha^m U^m.
      for (int l = 1; l <= e; ++l) summand.coeffs[l - 1] = g * g_v[e - l];
      out.push_back(std::move(summand));
    }
  }
  return RationalProgression::from_summands(std::move(out));
}

RationalProgression mul(const RationalProgression& x, const RationalProgression& y) {
  std::vector<ProgressionSummand> out;
  for (const auto& s : x.summands())
    for (const auto& t : y.summands()) {
      long g = std::gcd(s.b, t.b);
      if (floor_mod(s.r - t.r, g) != 0) continue;
      long bb = std::lcm(s.b, t.b);
      long k0 = s.r;
      while (floor_mod(k0 - t.r, t.b) != 0) k0 += s.b;
      long m0 = (k0 - s.r) / s.b;
      long n0 = (k0 - t.r) / t.b;
      long ks = bb / s.b, kt = bb / t.b;
      MotiveFraction factor = q_power(-s.a * m0 - t.a * n0);
      ProgressionSummand p{s.a * ks + t.a * kt, bb, k0, {}};
      p.coeffs = interpolate_binomial(sample(s.degree() + t.degree(), [&](int m) {
        return factor * s.value_at(m0 + ks * m) * t.value_at(n0 + kt * m);
      }));
      out.push_back(std::move(p));
    }
  return RationalProgression::from_summands(std::move(out));
}

RationalProgression sigma_n(const RationalProgression& x, int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  // sigma of a sum is the coefficientwise-product convolution of the parts.
  std::vector<RationalProgression> acc(n + 1);
  acc[0] = RationalProgression::unit();
  for (const auto& s : x.summands()) {
    int deg = s.degree();
    std::vector<SigmaVector> at_m;
    for (int m = 0; m <= n * deg; ++m) at_m.push_back(sigma_vector(s.value_at(m), n));
    std::vector<RationalProgression> part(n + 1);
    part[0] = RationalProgression::unit();
    for (int j = 1; j <= n; ++j) {
      ProgressionSummand t{s.a * j, s.b, s.r, {}};
      t.coeffs = interpolate_binomial(sample(j * deg, [&](int m) { return at_m[m][j]; }));
      part[j] = RationalProgression::from_summands({t});
    }
    std::vector<RationalProgression> next(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        if (!acc[i].is_zero() && !part[j].is_zero()) next[i + j] += mul(acc[i], part[j]);
    acc = std::move(next);
  }
  return acc[n];
}

Series expand_zero(const RationalProgression& x, int order) {
  Series s(1, order);
  for (long k = 1; k <= order; ++k) s.set({static_cast<int>(k)}, x.coefficient(k));
  return s;
}

Series expand_infinity(const RationalProgression& x, int order) {
  Series s(1, order);
  for (long k = 0; k <= order; ++k) s.set({static_cast<int>(k)}, -x.coefficient(-k));
  return s;
}

MotiveFraction eval_infinity(const RationalProgression& x) { return -x.coefficient(0); }

}  // namespace motdt
