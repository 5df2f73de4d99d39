#include "motdt/fraction.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "motdt/error.hpp"

namespace motdt {


MonodromicMotive TateUnit::expand() const {
  MonodromicMotive m = MonodromicMotive::monomial(make_rational(half_power, 2), sign);
  for (const auto& [n, e] : factors) m *= cyclotomic_factor(n).pow(e);
  return m;
}

std::string TateUnit::to_string() const {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += "*";
    s += part;
  };
  if (sign < 0) s = "-";
  if (half_power != 0) {
    if (sign < 0) s += render_monomial(make_rational(half_power, 2));
    else append(render_monomial(make_rational(half_power, 2)));
  }
  for (const auto& [n, e] : factors) {
    std::string f = n == 1 ? "(q-1)" : "(q^" + std::to_string(n) + "-1)";
    if (e != 1) f += "^" + std::to_string(e);
    if (s == "-") s += f;
    else append(f);
  }
  if (s.empty()) return "1";
  if (s == "-") return "-1";
  return s;
}

TateUnit TateUnit::substitute(long k) const {
  if (k <= 0) fail(ErrorKind::invalid_argument, "substitution exponent must be positive");
  TateUnit u;
  u.sign = sign;
  u.half_power = half_power * k;
  for (const auto& [n, e] : factors) u.factors[n * k] += e;
  return u;
}

TateUnit operator*(const TateUnit& a, const TateUnit& b) {
  TateUnit u = a;
  u.sign *= b.sign;
  u.half_power += b.half_power;
  for (const auto& [n, e] : b.factors) u.factors[n] += e;
  return u;
}

TateUnit cyclotomic_unit(long n, long e) {
  if (n < 1 || e < 0) fail(ErrorKind::invalid_argument, "bad cyclotomic factor");
  TateUnit u;
  if (e > 0) u.factors[n] = e;
  return u;
}

MotiveFraction::MotiveFraction(MonodromicMotive num, const TateUnit& den) : num_(std::move(num)), den_(den) {
  normalize();
}

void MotiveFraction::normalize() {
  if (den_.sign != 1 || den_.half_power != 0) {
    num_ = num_.shifted(make_rational(-den_.half_power, 2)).scaled(den_.sign);
    den_.sign = 1;
    den_.half_power = 0;
  }
  if (num_.is_zero()) {
    den_.factors.clear();
    return;
  }
  for (auto it = den_.factors.begin(); it != den_.factors.end();) {
    while (it->second > 0) {
      auto q = num_.divide_cyclotomic(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = den_.factors.erase(it);
    else ++it;
  }
}

std::optional<MonodromicMotive> MotiveFraction::as_motive() const {
  // Normalization cancels every factor that divides; a product of
  // binomials q^n - 1 dividing the numerator is cancelled factor by factor.
  if (den_.factors.empty()) return num_;
  return std::nullopt;
}

MotiveFraction& MotiveFraction::operator+=(const MotiveFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  TateUnit common;
  TateUnit mine, theirs;
  for (const auto& [n, e] : den_.factors) common.factors[n] = e;
  for (const auto& [n, e] : o.den_.factors) common.factors[n] = std::max(common.factors[n], e);
  for (const auto& [n, e] : common.factors) {
    auto a = den_.factors.find(n);
    auto b = o.den_.factors.find(n);
    long ea = a == den_.factors.end() ? 0 : a->second;
    long eb = b == o.den_.factors.end() ? 0 : b->second;
    if (e > ea) mine.factors[n] = e - ea;
    if (e > eb) theirs.factors[n] = e - eb;
  }
  num_ = num_ * mine.expand() + o.num_ * theirs.expand();
  den_ = common;
  normalize();
  return *this;
}

MotiveFraction& MotiveFraction::operator-=(const MotiveFraction& o) { return *this += -o; }

MotiveFraction& MotiveFraction::operator*=(const MotiveFraction& o) {
  *this = *this * o;
  return *this;
}

MotiveFraction MotiveFraction::operator-() const {
  MotiveFraction f = *this;
  f.num_ = -f.num_;
  return f;
}

MotiveFraction operator*(const MotiveFraction& a, const MotiveFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return MotiveFraction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const MotiveFraction& a, const MotiveFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_.expand() == b.num_ * a.den_.expand();
}

MotiveFraction MotiveFraction::divided_by(const TateUnit& u) const { return MotiveFraction(num_, den_ * u); }

std::optional<TateUnit> as_tate_unit(const MonodromicMotive& m) {
  if (m.is_zero()) return std::nullopt;
  Rational alpha = m.min_exponent();
  Rational twice = alpha * 2;
  if (!is_integral(twice)) return std::nullopt;
  MonodromicMotive rest = m.shifted(-alpha);
  if (!rest.is_integral_exponents()) return std::nullopt;
  TateUnit u;
  u.half_power = to_long(twice.get_num());
  long span = to_long(rest.max_exponent().get_num());
  for (long k = span; k >= 1 && !rest.is_constant(); --k) {
    while (true) {
      auto q = rest.divide_cyclotomic(k);
      if (!q) break;
      rest = std::move(*q);
      ++u.factors[k];
    }
  }
  if (!rest.is_constant() || abs(rest.coeff(Rational(0))) != 1) return std::nullopt;
  u.sign = rest.coeff(Rational(0)) > 0 ? 1 : -1;
  return u;
}

std::optional<MotiveFraction> MotiveFraction::inverse() const {
  if (num_.is_zero()) return std::nullopt;
  // Any monomial is a unit, so strip the lowest one first.
  Rational alpha = num_.min_exponent();
  MonodromicMotive rest = num_.shifted(-alpha);
  auto unit = as_tate_unit(rest);
  if (!unit) return std::nullopt;
  MonodromicMotive top = den_.expand().shifted(-alpha);
  TateUnit bottom = *unit;
  top = top.scaled(bottom.sign).shifted(make_rational(-bottom.half_power, 2));
  bottom.sign = 1;
  bottom.half_power = 0;
  return MotiveFraction(top, bottom);
}

MotiveFraction MotiveFraction::operator/(const MotiveFraction& o) const {
  auto inv = o.inverse();
  if (!inv) fail(ErrorKind::division_error, "divisor " + o.to_string() + " is not invertible");
  return *this * *inv;
}

MotiveFraction MotiveFraction::shifted(const Rational& e) const {
  MotiveFraction f = *this;
  f.num_ = f.num_.shifted(e);
  return f;
}

MotiveFraction MotiveFraction::substitute(long k) const {
  return MotiveFraction(num_.substitute(Rational(k)), den_.substitute(k));
}

std::string MotiveFraction::to_string() const {
  if (den_.is_trivial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool single = den_.factors.size() == 1 && den_.factors.begin()->second == 1;
  return n + "/" + (single ? d : "(" + d + ")");
}

}  // namespace motdt
