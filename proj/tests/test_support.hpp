#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "motdt/sampling.hpp"

namespace motdt::testing {

using sampling::Rng;
using sampling::random_fraction;
using sampling::random_motive;
using sampling::random_unit;
using Factors = sampling::Factors;

inline Series brute_zero(const MotiveFraction& g, const Factors& f, int order) { return sampling::geometric_zero(g, f, order); }
inline Series brute_infinity(const MotiveFraction& g, const Factors& f, int order) {
  return sampling::geometric_infinity(g, f, order);
}

// Evaluation q^(k/L) -> g^k in the field with P = 2^61 - 1 elements, L a
// common denominator of the exponents. A ring homomorphism, so it serves as
// an arithmetic oracle independent of the symbolic code paths.
struct ModEval {
  static constexpr std::uint64_t P = (1ULL << 61) - 1;
  std::uint64_t g = 3;
  long L = 27720;  // lcm(1..12)

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
  }
  static std::uint64_t pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
  static std::uint64_t reduce(const Integer& c) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), P);
    return r.get_ui();
  }

  std::uint64_t operator()(const MonodromicMotive& m) const {
    std::uint64_t v = 0;
    for (const auto& t : m.terms()) {
      Rational e = t.exponent * L;
      if (e.get_den() != 1) throw std::logic_error("L is not a common denominator");
      Integer k;
      mpz_fdiv_r_ui(k.get_mpz_t(), e.get_num_mpz_t(), P - 1);
      v = (v + mul(reduce(t.coeff), pow(g, k.get_ui()))) % P;
    }
    return v;
  }
  std::uint64_t operator()(const MotiveFraction& x) const {
    std::uint64_t d = (*this)(x.denominator().expand());
    if (d == 0) throw std::logic_error("denominator vanishes at the sample point");
    return mul((*this)(x.numerator()), inv(d));
  }
};

}  // namespace motdt::testing
