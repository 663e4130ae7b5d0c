#include "superquant/freesuper.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superquant/errors.hpp"

namespace superquant {

int Weight::total() const { return std::accumulate(nu.begin(), nu.end(), 0); }

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < nu.size(); ++i) r.nu[i] += o.nu[i];
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < nu.size(); ++i) out << (i ? "," : "") << nu[i];
  out << ")";
  return out.str();
}

Weight Monomial::weight(int rank) const {
  Weight w(rank);
  for (auto l : letters) ++w.nu[l];
  return w;
}

int Monomial::parity(const CartanDatum& datum) const {
  if (!datum.tau) return 0;
  int odd = *datum.tau - 1;
  int p = 0;
  for (auto l : letters)
    if (l == odd) p ^= 1;
  return p;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

std::string Monomial::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i)
    out << (i ? "*" : "") << "t" << int(letters[i]) + 1;
  return out.str();
}

FreeElem free_zero() { return {}; }

FreeElem free_unit() {
  FreeElem e;
  e[Monomial::unit()] = RatFunc(Rat(1));
  return e;
}

FreeElem free_gen(int i) {
  FreeElem e;
  e[Monomial::generator(i)] = RatFunc(Rat(1));
  return e;
}

void add_term(FreeElem& e, const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

void add_term(TensorElem& e, const Monomial& a, const Monomial& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = e.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

FreeElem operator+(const FreeElem& a, const FreeElem& b) {
  FreeElem r = a;
  for (const auto& [m, c] : b) add_term(r, m, c);
  return r;
}

FreeElem operator-(const FreeElem& a, const FreeElem& b) {
  FreeElem r = a;
  for (const auto& [m, c] : b) add_term(r, m, -c);
  return r;
}

FreeElem operator*(const RatFunc& c, const FreeElem& a) {
  FreeElem r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a) r[m] = c * x;
  return r;
}

FreeElem free_mul(const FreeElem& a, const FreeElem& b) {
  FreeElem r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(r, ma * mb, ca * cb);
  return r;
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
  TensorElem r = a;
  for (const auto& [k, c] : b) add_term(r, k.first, k.second, c);
  return r;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
  TensorElem r = a;
  for (const auto& [k, c] : b) add_term(r, k.first, k.second, -c);
  return r;
}

bool is_zero(const FreeElem& e) { return e.empty(); }
bool is_zero(const TensorElem& e) { return e.empty(); }

std::string to_string(const FreeElem& e) {
  if (e.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : e) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << m.to_string();
  }
  return out.str();
}

Weight weight_of(const FreeElem& e, int rank) {
  if (e.empty()) throw NonHomogeneous("weight of the zero element is undefined");
  Weight w = e.begin()->first.weight(rank);
  for (const auto& [m, c] : e)
    if (!(m.weight(rank) == w)) throw NonHomogeneous();
  return w;
}

std::vector<Monomial> monomials_of_weight(const Weight& w) {
  std::vector<std::uint8_t> letters;
  for (std::size_t i = 0; i < w.nu.size(); ++i)
    letters.insert(letters.end(), w.nu[i], static_cast<std::uint8_t>(i));
  std::vector<Monomial> out;
  if (letters.empty()) {
    out.push_back(Monomial::unit());
    return out;
  }
  std::sort(letters.begin(), letters.end());
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

FreeAlgebra::FreeAlgebra(CartanDatum datum) : datum_(std::move(datum)), unit_L_(datum_.unit_L()) {}

Rat FreeAlgebra::weight_pairing(const Weight& nu, const Weight& nu_prime) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i) {
    if (nu.nu[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (nu_prime.nu[j] == 0) continue;
      s += datum_.d[i] * datum_.a[i][j] * nu.nu[i] * nu_prime.nu[j];
    }
  }
  return s;
}

RatFunc FreeAlgebra::q_to(const Rat& exponent) const {
  Rat e = exponent * unit_L_;
  if (e.get_den() != 1) throw std::logic_error("q_to: exponent not representable at unit_L");
  return RatFunc::q_power(e.get_num().get_si(), unit_L_);
}

TensorElem FreeAlgebra::twisted_mul(const TensorElem& x, const TensorElem& y) const {
  TensorElem r;
  for (const auto& [xk, xc] : x) {
    const auto& [x1, x2] = xk;
    Weight w2 = x2.weight(rank());
    int p2 = parity(x2);
    for (const auto& [yk, yc] : y) {
      const auto& [y1, y2] = yk;
      RatFunc c = xc * yc * q_to(weight_pairing(w2, y1.weight(rank())));
      if (p2 && parity(y1)) c = -c;
      add_term(r, x1 * y1, x2 * y2, c);
    }
  }
  return r;
}

const TensorElem& FreeAlgebra::r_of(const Monomial& m) const {
  std::scoped_lock lock(memo_mu_);
  auto it = r_memo_.find(m);
  if (it != r_memo_.end()) return it->second;

  TensorElem value;
  if (m.letters.empty()) {
    add_term(value, Monomial::unit(), Monomial::unit(), RatFunc(Rat(1)));
  } else {
    // r(theta_i w) = r(theta_i) * r(w) under the twisted multiplication.
    int i = m.letters.front();
    Monomial tail(std::vector<std::uint8_t>(m.letters.begin() + 1, m.letters.end()));
    TensorElem head;
    add_term(head, Monomial::generator(i), Monomial::unit(), RatFunc(Rat(1)));
    add_term(head, Monomial::unit(), Monomial::generator(i), RatFunc(Rat(1)));
    value = twisted_mul(head, r_of(tail));
  }
  return r_memo_.emplace(m, std::move(value)).first->second;
}

TensorElem FreeAlgebra::coproduct_r(const FreeElem& x) const {
  TensorElem r;
  for (const auto& [m, c] : x)
    for (const auto& [k, rc] : r_of(m)) add_term(r, k.first, k.second, c * rc);
  return r;
}

}  // namespace superquant
