#pragma once

#include <ostream>
#include <map>
#include <optional>
#include <string>

#include "motdt/motive.hpp"

namespace motdt {

// sign * q^(half_power/2) * prod (q^n - 1)^e, every n >= 1 and e >= 1.
struct TateUnit {
  int sign = 1;
  long half_power = 0;
  std::map<long, long> factors;

  bool is_trivial() const { return sign == 1 && half_power == 0 && factors.empty(); }
  MonodromicMotive expand() const;
  std::string to_string() const;
  // f(q) -> f(q^k) for k >= 1.
  TateUnit substitute(long k) const;

  friend TateUnit operator*(const TateUnit& a, const TateUnit& b);
  friend bool operator==(const TateUnit& a, const TateUnit& b) = default;
};

TateUnit cyclotomic_unit(long n, long e = 1);

// Numerator over a TateUnit. Constructors normalize: the sign and the
// monomial part of the unit are folded into the numerator and factors
// q^n - 1 dividing the numerator exactly are cancelled.
class MotiveFraction {
 public:
  MotiveFraction() = default;
  MotiveFraction(long c) : num_(c) {}  // NOLINT
  MotiveFraction(const Integer& c) : num_(c) {}  // NOLINT
  MotiveFraction(MonodromicMotive m) : num_(std::move(m)) {}  // NOLINT
  MotiveFraction(MonodromicMotive num, const TateUnit& den);

  const MonodromicMotive& numerator() const { return num_; }
  const TateUnit& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_trivial() && num_ == MonodromicMotive(1); }
  bool is_denominator_free() const { return den_.factors.empty(); }

  // The element as a monodromic motive when the denominator divides out.
  std::optional<MonodromicMotive> as_motive() const;

  MotiveFraction& operator+=(const MotiveFraction& o);
  MotiveFraction& operator-=(const MotiveFraction& o);
  MotiveFraction& operator*=(const MotiveFraction& o);
  MotiveFraction operator-() const;

  friend MotiveFraction operator+(MotiveFraction a, const MotiveFraction& b) { return a += b; }
  friend MotiveFraction operator-(MotiveFraction a, const MotiveFraction& b) { return a -= b; }
  friend MotiveFraction operator*(const MotiveFraction& a, const MotiveFraction& b);
  // Cross-multiplication equality.
  friend bool operator==(const MotiveFraction& a, const MotiveFraction& b);
  friend bool operator!=(const MotiveFraction& a, const MotiveFraction& b) { return !(a == b); }

  MotiveFraction divided_by(const TateUnit& u) const;
  // Inverse when the numerator is itself a Tate unit.
  std::optional<MotiveFraction> inverse() const;
  // Throws division-error when o is not invertible.
  MotiveFraction operator/(const MotiveFraction& o) const;

  MotiveFraction shifted(const Rational& e) const;
  MotiveFraction substitute(long k) const;

  std::string to_string() const;

 private:
  void normalize();

  MonodromicMotive num_;
  TateUnit den_;
};

// Recognizes +-q^a * prod (q^n - 1)^e.
std::optional<TateUnit> as_tate_unit(const MonodromicMotive& m);

inline std::ostream& operator<<(std::ostream& os, const MotiveFraction& x) { return os << x.to_string(); }

}  // namespace motdt
