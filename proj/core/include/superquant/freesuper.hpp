#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "superquant/cartan.hpp"
#include "superquant/ratfunc.hpp"

namespace superquant {

/// Multigrading over N[I]: multiplicity of each generator index.
struct Weight {
  std::vector<int> nu;

  explicit Weight(int rank = 0) : nu(rank, 0) {}
  explicit Weight(std::vector<int> v) : nu(std::move(v)) {}
  int total() const;
  bool is_zero() const { return total() == 0; }
  Weight operator+(const Weight& o) const;
  bool operator==(const Weight& o) const { return nu == o.nu; }
  bool operator<(const Weight& o) const { return nu < o.nu; }
  std::string to_string() const;
};

/// Word in the generators theta_1..theta_s, stored as 0-based indices.
struct Monomial {
  std::vector<std::uint8_t> letters;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint8_t> l) : letters(std::move(l)) {}
  static Monomial unit() { return Monomial(); }
  static Monomial generator(int i) { return Monomial({static_cast<std::uint8_t>(i)}); }  // 0-based

  std::size_t degree() const { return letters.size(); }
  Weight weight(int rank) const;
  int parity(const CartanDatum& datum) const;  // 0 or 1
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return letters == o.letters; }
  std::string to_string() const;  // t1*t2*...
};

/// Degree-lexicographic order: shorter words first, then lexicographic.
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
  bool operator()(const std::pair<Monomial, Monomial>& a,
                  const std::pair<Monomial, Monomial>& b) const {
    if (operator()(a.first, b.first)) return true;
    if (operator()(b.first, a.first)) return false;
    return operator()(a.second, b.second);
  }
};

using FreeElem = std::map<Monomial, RatFunc, DegLex>;
using TensorElem = std::map<std::pair<Monomial, Monomial>, RatFunc, DegLex>;

FreeElem free_zero();
FreeElem free_unit();
FreeElem free_gen(int i);  // 0-based
void add_term(FreeElem& e, const Monomial& m, const RatFunc& c);
void add_term(TensorElem& e, const Monomial& a, const Monomial& b, const RatFunc& c);
FreeElem operator+(const FreeElem& a, const FreeElem& b);
FreeElem operator-(const FreeElem& a, const FreeElem& b);
FreeElem operator*(const RatFunc& c, const FreeElem& a);
/// Plain (untwisted) product in the free algebra: concatenation of words.
FreeElem free_mul(const FreeElem& a, const FreeElem& b);
TensorElem operator+(const TensorElem& a, const TensorElem& b);
TensorElem operator-(const TensorElem& a, const TensorElem& b);
bool is_zero(const FreeElem& e);
bool is_zero(const TensorElem& e);
std::string to_string(const FreeElem& e);

/// Weight of a homogeneous element; throws NonHomogeneous otherwise.
Weight weight_of(const FreeElem& e, int rank);

/// All monomials of the given weight, in deglex order.
std::vector<Monomial> monomials_of_weight(const Weight& w);

/// The free associative superalgebra on theta_i over a fixed Cartan datum,
/// with the twisted multiplication on f' (x) f' and the algebra map r.
/// r is memoized per monomial; the memo table is mutex-guarded so concurrent
/// Gram-block computations can share one instance.
class FreeAlgebra {
 public:
  explicit FreeAlgebra(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  long unit_L() const { return unit_L_; }

  /// <|x|,|x'|> = sum_ij d_i nu_i nu'_j a_ij, returned as the q-exponent.
  Rat weight_pairing(const Weight& nu, const Weight& nu_prime) const;
  RatFunc q_to(const Rat& exponent) const;

  int parity(const Monomial& m) const { return m.parity(datum_); }

  TensorElem twisted_mul(const TensorElem& x, const TensorElem& y) const;
  TensorElem coproduct_r(const FreeElem& x) const;
  const TensorElem& r_of(const Monomial& m) const;

 private:
  CartanDatum datum_;
  long unit_L_;
  mutable std::recursive_mutex memo_mu_;
  mutable std::map<Monomial, TensorElem, DegLex> r_memo_;
};

}  // namespace superquant
