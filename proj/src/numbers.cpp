#include "motdt/numbers.hpp"

#include "motdt/error.hpp"

namespace motdt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational mod_of(const Rational& x, const Integer& n) {
  Rational quotient = x / Rational(n);
  return x - Rational(n * floor_of(quotient));
}

Integer binomial(const Integer& a, unsigned long k) {
  if (a >= 0) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
  }
  // C(a, k) = (-1)^k C(k - a - 1, k) for negative a
  Integer r;
  Integer top = Integer(k) - a - 1;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return (k % 2 == 0) ? r : Integer(-r);
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorKind::invalid_argument, "integer out of machine range: " + x.get_str());
  return x.get_si();
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (is_integral(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace motdt
