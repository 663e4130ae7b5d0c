#include "superquant/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "superquant/errors.hpp"

namespace superquant {

long Laurent::min_exp() const { return terms_.begin()->first; }
long Laurent::max_exp() const { return terms_.rbegin()->first; }

Rat Laurent::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Laurent::leading_coeff() const { return terms_.rbegin()->second; }

void Laurent::set(long exp, const Rat& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent a = *this, b = o;
  align(a, b);
  for (const auto& [e, c] : b.terms_) a.set(e, a.coeff(e) + c);
  return a;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent a = *this, b = o;
  align(a, b);
  Laurent r;
  r.unit_L_ = a.unit_L_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

Laurent Laurent::scaled(const Rat& c) const {
  Laurent r;
  r.unit_L_ = unit_L_;
  if (c == 0) return r;
  for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
  return r;
}

Laurent Laurent::shifted(long k) const {
  Laurent r;
  r.unit_L_ = unit_L_;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (unit_L_ == o.unit_L_) return terms_ == o.terms_;
  Laurent a = *this, b = o;
  align(a, b);
  return a.terms_ == b.terms_;
}

Rat Laurent::eval_one() const {
  Rat s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Laurent Laurent::rescaled(long new_L) const {
  if (new_L == unit_L_) return *this;
  if (new_L % unit_L_ != 0) throw std::logic_error("rescaled: new_L must be a multiple of unit_L");
  long f = new_L / unit_L_;
  Laurent r;
  r.unit_L_ = new_L;
  for (const auto& [e, c] : terms_) r.terms_[e * f] = c;
  return r;
}

bool Laurent::is_palindromic() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

Rat Laurent::content() const {
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  if (leading_coeff() < 0) r = -r;
  return r;
}

void align(Laurent& a, Laurent& b) {
  if (a.unit_L_ == b.unit_L_) return;
  long l = std::lcm(a.unit_L_, b.unit_L_);
  a = a.rescaled(l);
  b = b.rescaled(l);
}

namespace {

// Normalizes to min_exp 0, content 1, positive leading coefficient.
Laurent make_primitive(const Laurent& p) {
  if (p.is_zero()) return p;
  Laurent q = p.shifted(-p.min_exp());
  return q.scaled(Rat(1) / q.content());
}

// Remainder of polynomial division (both min_exp 0 viewed as ordinary polys).
Laurent poly_rem(Laurent a, const Laurent& b) {
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rat f = a.leading_coeff() / b.leading_coeff();
    a -= b.shifted(a.max_exp() - b.max_exp()).scaled(f);
  }
  return a;
}

}  // namespace

Laurent laurent_gcd(Laurent a, Laurent b) {
  align(a, b);
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  a = make_primitive(a);
  b = make_primitive(b);
  while (!b.is_zero()) {
    Laurent r = poly_rem(a, b);
    a = b;
    b = r.is_zero() ? r : make_primitive(r);
  }
  return make_primitive(a);
}

Laurent div_exact(const Laurent& a0, const Laurent& b0) {
  Laurent a = a0, b = b0;
  align(a, b);
  if (b.is_zero()) throw DivisionByZero("div_exact by zero polynomial");
  if (a.is_zero()) return Laurent::zero().rescaled(a.unit_L());
  long shift = a.min_exp() - b.min_exp();
  a = a.shifted(-a.min_exp());
  b = b.shifted(-b.min_exp());
  Laurent q = Laurent::zero().rescaled(a.unit_L());
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rat f = a.leading_coeff() / b.leading_coeff();
    long e = a.max_exp() - b.max_exp();
    q.set(e, f);
    a -= b.shifted(e).scaled(f);
  }
  if (!a.is_zero()) throw std::logic_error("div_exact: inexact division");
  return q.shifted(shift);
}

Laurent laurent_lcm(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent::zero();
  Laurent g = laurent_gcd(a, b);
  Laurent l = div_exact(a * b, g);
  if (l.is_zero()) return l;
  Laurent m = l.shifted(-l.min_exp());
  return m.scaled(Rat(1) / m.content());
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (ac == 1) && e != 0;
    if (!unit_coeff) out << ac.get_str();
    if (e != 0) {
      if (!unit_coeff) out << "*";
      out << "q^";
      if (e % unit_L_ == 0) {
        long p = e / unit_L_;
        if (p < 0) out << "(" << p << ")";
        else out << p;
      } else {
        out << "(" << e << "/" << unit_L_ << ")";
      }
    }
  }
  return out.str();
}

}  // namespace superquant
