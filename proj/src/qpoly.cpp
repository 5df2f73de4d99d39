#include "motdt/qpoly.hpp"

#include <cctype>
#include <optional>

#include "motdt/error.hpp"

namespace motdt {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }
QPoly QPoly::t() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const { return scaled(-1); }

QPoly QPoly::scaled(const Rational& k) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= k;
  return QPoly(std::move(c));
}

QPoly QPoly::pow(unsigned long k) const {
  QPoly acc = constant(1), base = *this;
  for (; k; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(i));
  return QPoly(std::move(c));
}

QPoly QPoly::monic() const { return is_zero() ? *this : scaled(1 / leading()); }

QPoly QPoly::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1, g = 0;
  for (const auto& x : c_) l = lcm(l, Integer(x.get_den()));
  std::vector<Rational> c;
  for (const auto& x : c_) {
    Rational y = x * l;
    g = gcd(g, Integer(y.get_num()));
    c.push_back(y);
  }
  if (c.back() < 0) g = -g;
  for (auto& x : c) x /= g;
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& x = c_[i];
    if (x == 0) continue;
    Rational a = abs(x);
    if (out.empty()) out = x < 0 ? "-" : "";
    else out += x < 0 ? " - " : " + ";
    std::string mono = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
    if (mono.empty()) out += motdt::to_string(a);
    else if (a == 1) out += mono;
    else out += motdt::to_string(a) + "*" + mono;
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorKind::division_error, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[i] / lb;
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "squarefree decomposition of a constant");
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = gcd(f, f.derivative());
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(f.derivative(), a).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    QPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  QPoly parse() {
    QPoly p = expr();
    skip();
    if (pos_ < s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  static constexpr int kMaxDegree = 256;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::syntax_error, "at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QPoly expr() {
    QPoly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      QPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      const std::size_t at = pos_;
      QPoly rhs = unary();
      if (c == '*') {
        acc = acc * rhs;
        if (acc.degree() > kMaxDegree) error("degree too large");
      } else {
        if (rhs.degree() > 0) {
          pos_ = at;
          error("division by a non-constant");
        }
        if (rhs.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        acc = acc.scaled(1 / rhs.leading());
      }
    }
    return acc;
  }

  QPoly unary() {
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      QPoly p = unary();
      return c == '-' ? -p : p;
    }
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      Integer e = literal("exponent");
      if (e > kMaxDegree || (base.degree() > 0 && e * base.degree() > kMaxDegree)) error("degree too large");
      base = base.pow(e.get_ui());
    }
    char c = peek();
    if (c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) error("implicit multiplication");
    return base;
  }

  QPoly atom() {
    char c = peek();
    if (c == 't') {
      ++pos_;
      return QPoly::t();
    }
    if (c == '(') {
      ++pos_;
      QPoly p = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPoly::constant(Rational(literal("number")));
    if (c == '\0') error("unexpected end of input");
    error("unexpected '" + std::string(1, c) + "'");
  }

  Integer literal(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) error(std::string("expected ") + what);
    if (pos_ - start > 4096) error("literal too long");
    return Integer(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct BudgetExhausted {};

// Positive divisors of n != 0, by trial division with a primality test for
// the cofactor.
std::vector<Integer> divisors(Integer n, long& budget) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (unsigned long p = 2; p <= 100000 && Integer(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(Integer(p), e);
  }
  if (n > 1) {
    if (n > Integer(100000) * 100000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) throw BudgetExhausted{};
    primes.emplace_back(n, 1);
  }
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    budget -= static_cast<long>(out.size());
    if (budget < 0) throw BudgetExhausted{};
  }
  return out;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  QPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis = QPoly::constant(ys[i]);
    Rational den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly({-xs[j], Rational(1)});
      den *= xs[i] - xs[j];
    }
    acc += basis.scaled(1 / den);
  }
  return acc;
}

bool integral_coeffs(const QPoly& p) {
  for (const auto& c : p.coeffs())
    if (!is_integral(c)) return false;
  return true;
}

// A factor of minimal degree >= k_min of the primitive integer polynomial f,
// or nothing when f is irreducible.
std::optional<QPoly> smallest_factor(const QPoly& f, int k_min, long& budget) {
  const int n = f.degree();
  for (int k = k_min; 2 * k <= n; ++k) {
    std::vector<Rational> xs, values;
    for (long step = 0; static_cast<int>(xs.size()) <= k; ++step) {
      long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      Rational v = f(Rational(x));
      if (v == 0) return QPoly({Rational(-x), Rational(1)});
      xs.push_back(Rational(x));
      values.push_back(v);
    }
    std::vector<std::vector<Integer>> choices;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<Integer> ds = divisors(Integer(values[i].get_num()), budget);
      if (i > 0) {
        const std::size_t m = ds.size();
        for (std::size_t j = 0; j < m; ++j) ds.push_back(-ds[j]);
      }
      choices.push_back(std::move(ds));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<Rational> ys(xs.size());
    while (true) {
      if (--budget < 0) throw BudgetExhausted{};
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = Rational(choices[i][idx[i]]);
      QPoly g = interpolate(xs, ys);
      if (g.degree() == k && integral_coeffs(g) && divmod(f, g).second.is_zero()) return g.primitive();
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace

QPoly parse_polynomial(const std::string& text) { return Parser(text).parse(); }

Factorization factor_squarefree(const QPoly& f, long budget) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "factoring a constant");
  Factorization out;
  QPoly rest = f.primitive();
  int k_min = 1;
  while (rest.degree() >= 1) {
    if (rest.degree() == 1) {
      out.factors.push_back(rest.monic());
      break;
    }
    std::optional<QPoly> g;
    try {
      g = smallest_factor(rest, k_min, budget);
    } catch (const BudgetExhausted&) {
      out.complete = false;
      out.factors.push_back(rest.monic());
      break;
    }
    if (!g) {
      out.factors.push_back(rest.monic());
      break;
    }
    out.factors.push_back(g->monic());
    k_min = g->degree();
    rest = divmod(rest, *g).first.primitive();
  }
  return out;
}

}  // namespace motdt
