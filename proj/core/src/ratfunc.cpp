#include "superquant/ratfunc.hpp"

#include "superquant/errors.hpp"

namespace superquant {

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  align(num_, den_);
  if (num_.is_zero()) {
    den_ = Laurent::one().rescaled(den_.unit_L());
    return;
  }
  long a = num_.min_exp(), b = den_.min_exp();
  Laurent n = num_.shifted(-a);
  Laurent d = den_.shifted(-b);
  Laurent g = laurent_gcd(n, d);
  n = div_exact(n, g);
  d = div_exact(d, g);
  Rat c = d.content();  // carries the sign of the leading coefficient
  n = n.scaled(Rat(1) / c);
  d = d.scaled(Rat(1) / c);
  num_ = n.shifted(a - b);
  den_ = d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

Rat RatFunc::specialize_q1() const {
  Rat d = den_.eval_one();
  if (d == 0) throw PoleAtOne();
  return num_.eval_one() / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + " / " + d;
}

}  // namespace superquant
