#pragma once

#include <string>

#include "superquant/laurent.hpp"

namespace superquant {

/// Rational function in the formal variable v = q^{1/L}, kept in canonical
/// form: gcd(num, den) = 1 after clearing v-powers, den has min_exp 0,
/// content 1 and a positive leading coefficient. Equality is structural.
class RatFunc {
 public:
  RatFunc() : num_(Laurent::zero()), den_(Laurent::one()) {}
  RatFunc(const Rat& c) : num_(Laurent(c)), den_(Laurent::one()) {}  // NOLINT implicit
  RatFunc(long c) : RatFunc(Rat(c)) {}                               // NOLINT implicit
  explicit RatFunc(const Laurent& p) : num_(p), den_(Laurent::one()) { normalize(); }
  RatFunc(Laurent num, Laurent den);  // throws DivisionByZero if den == 0

  static RatFunc q_power(long exp_in_v, long unit_L = 1) {
    return RatFunc(Laurent::monomial(Rat(1), exp_in_v, unit_L));
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Laurent::one() && den_ == Laurent::one(); }
  bool is_polynomial() const { return den_ == Laurent::one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
  RatFunc inverse() const;                    // throws DivisionByZero
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Exact value at q = 1; throws PoleAtOne when the reduced denominator
  /// vanishes there.
  Rat specialize_q1() const;

  std::string to_string() const;

 private:
  Laurent num_, den_;
  void normalize();
};

}  // namespace superquant
