#include "motdt/classes.hpp"

#include <algorithm>

#include "motdt/error.hpp"

namespace motdt {

MonodromicMotive make_mu(long d) {
  if (d < 1) fail(ErrorKind::invalid_argument, "make_mu needs d >= 1");
  std::vector<MonodromicMotive::Term> terms;
  for (long j = 0; j < d; ++j) terms.push_back({make_rational(j, d), 1});
  return MonodromicMotive::from_terms(std::move(terms));
}

MonodromicMotive make_tate(long m) {
  return MonodromicMotive::monomial(make_rational(m, 2), (m % 2 == 0) ? 1 : -1);
}

MonodromicMotive monomial(const Rational& a) { return MonodromicMotive::monomial(a); }

MonodromicMotive lefschetz_minus_one() { return cyclotomic_factor(1); }

MonodromicMotive gl_class(long n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "gl_class needs n >= 0");
  MonodromicMotive r(1);
  for (long i = 0; i < n; ++i)
    r *= MonodromicMotive::monomial(Rational(n)) - MonodromicMotive::monomial(Rational(i));
  return r;
}

MonodromicMotive q_integer(long n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "q_integer needs n >= 0");
  std::vector<MonodromicMotive::Term> terms;
  for (long i = 0; i < n; ++i) terms.push_back({Rational(i), 1});
  return MonodromicMotive::from_terms(std::move(terms));
}

MonodromicMotive q_factorial(long n) {
  if (n < 0) fail(ErrorKind::invalid_argument, "q_factorial needs n >= 0");
  MonodromicMotive r(1);
  for (long i = 1; i <= n; ++i) r *= q_integer(i);
  return r;
}

Integer euler_char(const MonodromicMotive& x) { return x.value_at_one(); }

Integer euler_char(const MotiveFraction& x) {
  auto m = x.as_motive();
  if (!m) fail(ErrorKind::euler_undefined, "nontrivial denominator in " + x.to_string());
  return euler_char(*m);
}

namespace {

// Value of L^(m/2)(1 - [mu_d]) = (-1)^(m+1) sum_j q^(m/2 + j/d).
MonodromicMotive block(long m, long d) {
  std::vector<MonodromicMotive::Term> terms;
  Integer s = (m % 2 == 0) ? -1 : 1;
  for (long j = 1; j < d; ++j) terms.push_back({make_rational(m, 2) + make_rational(j, d), s});
  return MonodromicMotive::from_terms(std::move(terms));
}

std::vector<long> divisors_desc(long n) {
  std::vector<long> out;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    out.push_back(i);
    if (i != n / i) out.push_back(n / i);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

MonodromicMotive expand(const MuTerm& t) { return block(t.half_power, t.d).scaled(t.coeff); }

MonodromicMotive expand(const MuBasis& b) {
  MonodromicMotive r = b.remainder;
  for (const auto& t : b.terms) r += expand(t);
  return r;
}

MuBasis to_mu_basis(const MonodromicMotive& x) {
  MuBasis out;
  MonodromicMotive rest = x;
  while (true) {
    Integer best_den = 1;
    for (const auto& t : rest.terms())
      if (t.exponent.get_den() > best_den) best_den = t.exponent.get_den();
    if (best_den == 1) break;
    Rational beta;
    for (const auto& t : rest.terms())
      if (t.exponent.get_den() == best_den) {
        beta = t.exponent;
        break;
      }
    Integer a = rest.coeff(beta);
    bool matched = false;
    if (best_den.fits_slong_p() && best_den.get_si() < (1L << 30)) {
      for (long d : divisors_desc(2 * best_den.get_si())) {
        if (d < 2 || static_cast<std::size_t>(d - 1) > rest.size()) continue;
        for (long j = 1; j < d && !matched; ++j) {
          Rational twice_m = (beta - make_rational(j, d)) * 2;
          if (!is_integral(twice_m)) continue;
          long m = to_long(twice_m.get_num());
          MonodromicMotive b = block(m, d);
          Integer mag = 0;
          bool ok = true;
          for (const auto& t : b.terms()) {
            Integer c = rest.coeff(t.exponent);
            if (sign_of(c) != sign_of(a)) {
              ok = false;
              break;
            }
            if (mag == 0 || abs(c) < mag) mag = abs(c);
          }
          if (!ok) continue;
          Integer c = mag * sign_of(a) * b.terms().front().coeff;
          out.terms.push_back({c, m, d});
          rest -= b.scaled(c);
          matched = true;
        }
        if (matched) break;
      }
    }
    if (!matched) {
      out.remainder += MonodromicMotive::monomial(beta, a);
      rest -= MonodromicMotive::monomial(beta, a);
    }
  }
  out.remainder += rest;
  return out;
}

namespace {

struct Style {
  std::string lefschetz;
  std::string open;
  std::string close;
  std::string mu_prefix;
  std::string mu_suffix;
};

const Style kText{"L", "{", "}", "[mu_", "]"};
const Style kLatex{"\\mathbb{L}", "{", "}", "[\\mu_{", "}]"};

std::string l_power(long m, const Style& st) {
  if (m == 0) return "";
  if (m == 2) return st.lefschetz;
  std::string e = (m % 2 == 0) ? std::to_string(m / 2) : std::to_string(m) + "/2";
  return st.lefschetz + "^" + st.open + e + st.close;
}

std::string coeff_prefix(const Integer& c, bool first, bool& negative) {
  negative = c < 0;
  Integer mag = abs(c);
  std::string s;
  if (first) s = negative ? "-" : "";
  else s = negative ? " - " : " + ";
  if (mag != 1) s += mag.get_str() + "*";
  return s;
}

std::string render_term(const MuTerm& t, bool first, const Style& st) {
  bool neg = false;
  std::string s = coeff_prefix(t.coeff, first, neg);
  s += l_power(t.half_power, st) + "(1-" + st.mu_prefix + std::to_string(t.d) + st.mu_suffix + ")";
  return s;
}

std::string render_remainder(const MonodromicMotive& r, bool first, const Style& st) {
  std::string s;
  for (const auto& t : r.terms()) {
    bool neg = false;
    if (is_integral(t.exponent)) {
      long k = to_long(t.exponent.get_num());
      std::string p = l_power(2 * k, st);
      if (p.empty()) {
        s += first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + ");
        s += Integer(abs(t.coeff)).get_str();
      } else {
        s += coeff_prefix(t.coeff, first, neg) + p;
      }
    } else {
      s += coeff_prefix(t.coeff, first, neg) + render_monomial(t.exponent);
    }
    first = false;
  }
  return s;
}

std::optional<MuTerm> match_hint(const MonodromicMotive& x, long d) {
  if (x.is_zero() || d < 2) return std::nullopt;
  Rational twice_m = (x.min_exponent() - make_rational(1, d)) * 2;
  if (!is_integral(twice_m)) return std::nullopt;
  long m = to_long(twice_m.get_num());
  MonodromicMotive b = block(m, d);
  Integer c = x.terms().front().coeff * b.terms().front().coeff;
  if (b.scaled(c) != x) return std::nullopt;
  return MuTerm{c, m, d};
}

std::string render(const MonodromicMotive& x, std::optional<long> hint_d, const Style& st) {
  if (x.is_zero()) return "0";
  if (hint_d) {
    if (auto t = match_hint(x, *hint_d)) return render_term(*t, true, st);
  }
  MuBasis b = to_mu_basis(x);
  std::string s;
  bool first = true;
  for (const auto& t : b.terms) {
    s += render_term(t, first, st);
    first = false;
  }
  s += render_remainder(b.remainder, first, st);
  return s;
}

}  // namespace

std::string render_mu_basis(const MonodromicMotive& x, std::optional<long> hint_d) {
  return render(x, hint_d, kText);
}

std::string render_mu_basis_latex(const MonodromicMotive& x, std::optional<long> hint_d) {
  return render(x, hint_d, kLatex);
}

}  // namespace motdt
