#include "motdt/motive.hpp"

#include <algorithm>
#include <map>

#include "motdt/error.hpp"

namespace motdt {

namespace {

void combine_sorted(std::vector<MonodromicMotive::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = terms[i].coeff;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].exponent = terms[i].exponent;
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

template <class Op>
std::vector<MonodromicMotive::Term> merge(const std::vector<MonodromicMotive::Term>& a,
                                          const std::vector<MonodromicMotive::Term>& b, Op op) {
  std::vector<MonodromicMotive::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, op(Integer(0), b[j].coeff)});
      ++j;
    } else {
      Integer c = op(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MonodromicMotive::MonodromicMotive(long c) {
  if (c != 0) terms_.push_back({Rational(0), Integer(c)});
}

MonodromicMotive::MonodromicMotive(const Integer& c) {
  if (c != 0) terms_.push_back({Rational(0), c});
}

MonodromicMotive MonodromicMotive::monomial(const Rational& exponent, const Integer& coeff) {
  MonodromicMotive m;
  if (coeff != 0) m.terms_.push_back({exponent, coeff});
  return m;
}

MonodromicMotive MonodromicMotive::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.exponent.canonicalize();
  combine_sorted(terms);
  MonodromicMotive m;
  m.terms_ = std::move(terms);
  return m;
}

bool MonodromicMotive::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
}

bool MonodromicMotive::is_integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integral(t.exponent); });
}

Integer MonodromicMotive::coeff(const Rational& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, const Rational& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

const Rational& MonodromicMotive::min_exponent() const {
  if (terms_.empty()) fail(ErrorKind::invalid_argument, "min_exponent of zero");
  return terms_.front().exponent;
}

const Rational& MonodromicMotive::max_exponent() const {
  if (terms_.empty()) fail(ErrorKind::invalid_argument, "max_exponent of zero");
  return terms_.back().exponent;
}

MonodromicMotive& MonodromicMotive::operator+=(const MonodromicMotive& o) {
  terms_ = merge(terms_, o.terms_, [](const Integer& x, const Integer& y) { return Integer(x + y); });
  return *this;
}

MonodromicMotive& MonodromicMotive::operator-=(const MonodromicMotive& o) {
  terms_ = merge(terms_, o.terms_, [](const Integer& x, const Integer& y) { return Integer(x - y); });
  return *this;
}

MonodromicMotive& MonodromicMotive::operator*=(const MonodromicMotive& o) {
  *this = *this * o;
  return *this;
}

MonodromicMotive MonodromicMotive::operator-() const {
  MonodromicMotive m = *this;
  for (auto& t : m.terms_) t.coeff = -t.coeff;
  return m;
}

MonodromicMotive operator*(const MonodromicMotive& a, const MonodromicMotive& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].exponent).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.shifted(b.terms_[0].exponent).scaled(b.terms_[0].coeff);
  std::vector<MonodromicMotive::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  combine_sorted(out);
  MonodromicMotive m;
  m.terms_ = std::move(out);
  return m;
}

MonodromicMotive MonodromicMotive::pow(unsigned long n) const {
  MonodromicMotive result(1);
  MonodromicMotive base = *this;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MonodromicMotive MonodromicMotive::scaled(const Integer& c) const {
  if (c == 0) return {};
  MonodromicMotive m = *this;
  for (auto& t : m.terms_) t.coeff *= c;
  return m;
}

MonodromicMotive MonodromicMotive::shifted(const Rational& e) const {
  MonodromicMotive m = *this;
  if (e == 0) return m;
  for (auto& t : m.terms_) t.exponent += e;
  return m;
}

MonodromicMotive MonodromicMotive::substitute(const Rational& k) const {
  if (k == 0) return MonodromicMotive(value_at_one());
  MonodromicMotive m = *this;
  for (auto& t : m.terms_) t.exponent *= k;
  if (k < 0) std::reverse(m.terms_.begin(), m.terms_.end());
  return m;
}

Integer MonodromicMotive::value_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

std::optional<MonodromicMotive> MonodromicMotive::divide_cyclotomic(long n) const {
  if (n <= 0) fail(ErrorKind::invalid_argument, "cyclotomic index must be positive");
  // Every q^n - 1 vanishes at q = 1.
  Integer at_one = 0;
  for (const auto& t : terms_) at_one += t.coeff;
  if (at_one != 0) return std::nullopt;
  // Group by residue of the exponent modulo n; each group is q^r R(q^n) and
  // q^n - 1 divides it iff R(1) = 0.
  const Integer nn(n);
  std::map<Rational, std::vector<std::pair<Integer, const Integer*>>> groups;
  for (const auto& t : terms_) {
    Rational r = mod_of(t.exponent, nn);
    Rational k = (t.exponent - r) / Rational(nn);
    groups[r].push_back({k.get_num(), &t.coeff});
  }
  std::vector<Term> out;
  for (const auto& [r, ks] : groups) {
    Integer total = 0;
    for (const auto& kc : ks) total += *kc.second;
    if (total != 0) return std::nullopt;
    // R(y) / (y - 1): coefficient at y^k is the sum of r_j over j > k.
    Integer running = 0;
    for (std::size_t i = ks.size(); i-- > 1;) {
      running += *ks[i].second;
      const Integer& hi = ks[i].first;
      const Integer& lo = ks[i - 1].first;
      if (running == 0) continue;
      for (Integer k = lo; k < hi; ++k) out.push_back({r + Rational(k * nn), running});
    }
  }
  return from_terms(std::move(out));
}

std::string render_monomial(const Rational& e) {
  if (e == 1) return "q";
  if (is_integral(e) && e > 0) return "q^" + motdt::to_string(e);
  return "q^(" + motdt::to_string(e) + ")";
}

std::string MonodromicMotive::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    Integer mag = abs(c);
    if (t.exponent == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += render_monomial(t.exponent);
    }
    first = false;
  }
  return s;
}

MonodromicMotive cyclotomic_factor(long n) {
  return MonodromicMotive::monomial(Rational(n)) - MonodromicMotive(1);
}

}  // namespace motdt
