#include "motdt/lambda.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "motdt/error.hpp"

namespace motdt {

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void trim(FormalPolynomial::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

// Write-once cache keyed by T; readers never block each other.
template <class Key, class Value>
class OnceCache {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const Key& key, Make make) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, value);
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

FormalPolynomial::FormalPolynomial(long c) {
  if (c != 0) terms_[{}] = c;
}

FormalPolynomial FormalPolynomial::variable(bool y, int index) {
  if (index < 1 || index > kMaxIndex) fail(ErrorKind::invalid_argument, "variable index out of range");
  Monomial m((y ? kMaxIndex : 0) + index, 0);
  m.back() = 1;
  FormalPolynomial p;
  p.terms_[m] = 1;
  return p;
}

FormalPolynomial& FormalPolynomial::operator+=(const FormalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

FormalPolynomial FormalPolynomial::operator-() const {
  FormalPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b) {
  FormalPolynomial p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FormalPolynomial::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      trim(m);
      Integer c = ca * cb;
      auto it = p.terms_.find(m);
      if (it == p.terms_.end()) {
        p.terms_.emplace(std::move(m), c);
      } else {
        it->second += c;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  return p;
}

std::string FormalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Monomial> order;
  for (const auto& kv : terms_) order.push_back(kv.first);
  auto padded = [](Monomial m) {
    m.resize(2 * kMaxIndex, 0);
    return m;
  };
  std::sort(order.begin(), order.end(), [&](const Monomial& a, const Monomial& b) { return padded(a) > padded(b); });
  std::string s;
  bool first = true;
  for (const auto& m : order) {
    const Integer& c = terms_.at(m);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    Integer mag = abs(c);
    std::string body;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += (i < kMaxIndex ? "X" + std::to_string(i + 1) : "Y" + std::to_string(i - kMaxIndex + 1));
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    if (body.empty()) s += mag.get_str();
    else s += (mag != 1 ? mag.get_str() + "*" : "") + body;
    first = false;
  }
  return s;
}

const FormalPolynomial& universal_p(int n) {
  if (n < 1 || n > FormalPolynomial::kMaxIndex) fail(ErrorKind::invalid_argument, "universal_p needs 1 <= n <= 16");
  static OnceCache<int, FormalPolynomial> cache;
  // Entries are never evicted, so the reference stays valid.
  auto p = cache.get(n, [n] {
    std::vector<FormalPolynomial> x(n + 1), y(n + 1);
    x[0] = FormalPolynomial(1);
    y[0] = FormalPolynomial(1);
    for (int i = 1; i <= n; ++i) {
      x[i] = FormalPolynomial::variable(false, i);
      y[i] = FormalPolynomial::variable(true, i);
    }
    return apply_universal_p(n, x, y);
  });
  return *p;
}

std::vector<MonodromicMotive> sigma_poly_vector(const MonodromicMotive& x, int max_n) {
  if (max_n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  std::vector<MonodromicMotive> acc(max_n + 1);
  acc[0] = MonodromicMotive(1);
  // sigma of c*q^a is the coefficient series of (1 - q^a T)^(-c).
  for (const auto& t : x.terms()) {
    std::vector<MonodromicMotive> next(max_n + 1);
    for (int k = 0; k <= max_n; ++k) {
      Integer c = binomial(t.coeff + k - 1, k);
      if (c == 0) continue;
      MonodromicMotive f = MonodromicMotive::monomial(t.exponent * k, c);
      for (int i = 0; i + k <= max_n; ++i)
        if (!acc[i].is_zero()) next[i + k] += acc[i] * f;
    }
    acc = std::move(next);
  }
  return acc;
}

MonodromicMotive sigma_poly(const MonodromicMotive& x, int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  return sigma_poly_vector(x, n)[n];
}

namespace {

struct UnitSigma {
  SigmaVector values;  // sigma^n(1/f)
};

using UnitKey = std::pair<std::vector<std::pair<long, long>>, int>;

UnitSigma compute_unit_sigma(const TateUnit& f, int max_n) {
  std::vector<MonodromicMotive> sf = sigma_poly_vector(f.expand(), max_n);
  SigmaVector y(sf.begin(), sf.end());
  SigmaVector x(max_n + 1);
  x[0] = MotiveFraction(1);
  for (int n = 1; n <= max_n; ++n) {
    // P^n(x; y) = 1 is linear in x_n with coefficient p_n(y) = f(q^n).
    MotiveFraction rest = apply_universal_p(n, x, y);
    MotiveFraction rhs = MotiveFraction(1) - rest;
    TateUnit fn = f.substitute(n);
    x[n] = rhs.divided_by(fn);
  }
  return {std::move(x)};
}

OnceCache<UnitKey, UnitSigma>& unit_cache() {
  static OnceCache<UnitKey, UnitSigma> cache;
  return cache;
}

}  // namespace

SigmaVector sigma_unit_inverse_vector(const TateUnit& f, int max_n) {
  if (max_n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  if (f.sign != 1 || f.half_power != 0) fail(ErrorKind::invalid_argument, "unit must be a pure cyclotomic product");
  if (f.factors.empty()) return SigmaVector(max_n + 1, MotiveFraction(1));
  int depth = max_n <= 4 ? 4 : std::max(max_n, 8);
  UnitKey key{{f.factors.begin(), f.factors.end()}, depth};
  auto v = unit_cache().get(key, [&] { return compute_unit_sigma(f, depth); });
  return SigmaVector(v->values.begin(), v->values.begin() + max_n + 1);
}

MotiveFraction sigma_unit_inverse(long k, int n) {
  if (k < 1) fail(ErrorKind::invalid_argument, "sigma_unit_inverse needs k >= 1");
  return sigma_unit_inverse_vector(cyclotomic_unit(k), n)[n];
}

namespace {

MotiveFraction divide_exactly(const MotiveFraction& x, long n) {
  std::vector<MonodromicMotive::Term> terms;
  for (const auto& t : x.numerator().terms()) {
    if (!mpz_divisible_ui_p(t.coeff.get_mpz_t(), static_cast<unsigned long>(n)))
      fail(ErrorKind::internal_inconsistency, "sigma recurrence left a non-integral coefficient");
    terms.push_back({t.exponent, t.coeff / n});
  }
  return MotiveFraction(MonodromicMotive::from_terms(std::move(terms)), x.denominator());
}

}  // namespace

SigmaVector sigma_vector(const MotiveFraction& x, int max_n) {
  if (max_n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  if (max_n <= 1) {
    SigmaVector out{MotiveFraction(1), x};
    out.resize(max_n + 1);
    return out;
  }
  if (x.is_denominator_free()) {
    std::vector<MonodromicMotive> sa = sigma_poly_vector(x.numerator(), max_n);
    return SigmaVector(sa.begin(), sa.end());
  }
  // n sigma^n = sum_k psi^k(x) sigma^(n-k), with psi^k: f(q) -> f(q^k)
  // since every monomial is a line element.
  SigmaVector psi(max_n + 1), out(max_n + 1);
  for (int k = 1; k <= max_n; ++k) psi[k] = x.substitute(k);
  out[0] = MotiveFraction(1);
  for (int n = 1; n <= max_n; ++n) {
    MotiveFraction acc;
    for (int k = 1; k <= n; ++k) acc += psi[k] * out[n - k];
    out[n] = divide_exactly(acc, n);
  }
  return out;
}

// The universal-polynomial route, kept for cross-checks.
SigmaVector sigma_vector_universal(const MotiveFraction& x, int max_n) {
  if (max_n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  std::vector<MonodromicMotive> sa = sigma_poly_vector(x.numerator(), max_n);
  SigmaVector a(sa.begin(), sa.end());
  if (x.is_denominator_free()) return a;
  SigmaVector u = sigma_unit_inverse_vector(x.denominator(), max_n);
  SigmaVector out(max_n + 1);
  out[0] = MotiveFraction(1);
  for (int n = 1; n <= max_n; ++n) out[n] = apply_universal_p(n, a, u);
  return out;
}

MotiveFraction sigma_fraction(const MotiveFraction& x, int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  return sigma_vector(x, n)[n];
}

Integer sigma_int(const Integer& a, int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative sigma index");
  return binomial(a + n - 1, n);
}

MotiveFraction opposite_lambda(const MotiveFraction& x, int n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative lambda index");
  SigmaVector s = sigma_vector(x, n);
  for (int k = 1; k <= n; k += 2) s[k] = -s[k];
  SigmaVector inv(n + 1);
  inv[0] = MotiveFraction(1);
  for (int m = 1; m <= n; ++m) {
    MotiveFraction acc;
    for (int k = 1; k <= m; ++k) acc += s[k] * inv[m - k];
    inv[m] = -acc;
  }
  return inv[n];
}

}  // namespace motdt
