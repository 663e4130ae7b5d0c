#pragma once

#include <map>
#include <string>

#include "superquant/rational.hpp"

namespace superquant {

/// Sparse Laurent polynomial in the formal variable v = q^{1/L}.
///
/// Exponents are integers in v; unit_L records the root-of-q denominator L so
/// a term v^e can be rendered as q^{e/L}. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rat& c) { set(0, c); }
  Laurent(const Rat& c, long exp, long unit_L = 1) : unit_L_(unit_L) { set(exp, c); }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Rat(1)); }
  static Laurent monomial(const Rat& c, long exp, long unit_L = 1) {
    return Laurent(c, exp, unit_L);
  }

  bool is_zero() const { return terms_.empty(); }
  long min_exp() const;  // pre: !is_zero()
  long max_exp() const;  // pre: !is_zero()
  long unit_L() const { return unit_L_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<long, Rat>& terms() const { return terms_; }

  Rat coeff(long exp) const;
  Rat leading_coeff() const;  // coefficient of max_exp
  void set(long exp, const Rat& c);

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Rat& c) const;
  Laurent shifted(long k) const;  // multiply by v^k
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  /// Exact value at v = 1 (sum of coefficients).
  Rat eval_one() const;

  /// Rescales exponents so the polynomial lives in v' = q^{1/new_L}.
  /// new_L must be a multiple of unit_L.
  Laurent rescaled(long new_L) const;

  /// Invariant under v <-> v^-1, i.e. terms(e) == terms(-e) for all e.
  bool is_palindromic() const;

  /// Signed content: (gcd of coefficient numerators / lcm of denominators)
  /// carrying the sign of the leading coefficient. Pre: !is_zero().
  Rat content() const;

  std::string to_string() const;  // renders powers of q, splitting by unit_L

 private:
  std::map<long, Rat> terms_;
  long unit_L_ = 1;

  friend void align(Laurent& a, Laurent& b);
};

/// Brings two polynomials to a common unit_L (their lcm).
void align(Laurent& a, Laurent& b);

/// Primitive gcd with positive leading coefficient and min_exp 0.
/// gcd(0, b) is the normalized b. Both-zero input yields zero.
Laurent laurent_gcd(Laurent a, Laurent b);

/// Exact quotient a / b; throws DivisionByZero if b == 0 and
/// std::logic_error if the division is not exact.
Laurent div_exact(const Laurent& a, const Laurent& b);

/// lcm normalized like laurent_gcd.
Laurent laurent_lcm(const Laurent& a, const Laurent& b);

}  // namespace superquant
