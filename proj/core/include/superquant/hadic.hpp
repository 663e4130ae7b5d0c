#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superquant/liebialg.hpp"

namespace superquant {

/// PBW monomial: letters index the double's basis, sorted in the context's
/// normal order with odd letters appearing at most once.
using Word = std::vector<int>;
using PBWElem = std::map<Word, Rat>;
using PairWord = std::pair<Word, Word>;
/// Element of U(g) (x) U(g) (or of M+ (x) M-, depending on context).
using PairElem = std::map<PairWord, Rat>;

/// Element of (U(g) (x) U(g))[h]/h^2: c0 + h c1.
struct TruncPair {
  PairElem c0, c1;
};

struct HadicReport {
  std::string seed;
  bool j_matches_lemma = false;
  bool r_matches = false;
  bool cobracket_matches = false;
  bool intertwiner_matches = false;
  bool gauge_ok = false;
  std::vector<std::string> failures;
  bool ok() const {
    return j_matches_lemma && r_matches && cobracket_matches && intertwiner_matches && gauge_ok;
  }
};

/// Bounded-degree enveloping algebra of a Drinfeld double, its Verma modules
/// M+- and the order-h^2 twist machinery.
class HadicContext {
 public:
  explicit HadicContext(DoubleData dd, int cap = 4);  // throws SingularPhi

  const DoubleData& dd() const { return dd_; }
  int cap() const { return cap_; }
  int parity_of(const Word& w) const;

  /// Unique sorted normal form in U(g); throws CapExceeded for long inputs.
  PBWElem normal_form(const Word& w) const;
  PBWElem mul(const PBWElem& a, const PBWElem& b) const;

  /// Action of a basis letter on M+ (plus = true) or M-.
  PBWElem verma_act(int letter, const PBWElem& v, bool plus) const;
  /// phi(w) = w . (1+ (x) 1-) in M+ (x) M-.
  PairElem phi(const Word& w) const;
  PBWElem phi_inverse(const PairElem& w) const;

  /// J = (phi^-1 (x) phi^-1)((1 + h Omega_23 / 2) . vacuum) mod h^2.
  TruncPair compute_J() const;
  /// Delta(x) = J^-1 Delta_0(x) J mod h^2 for a basis letter x.
  TruncPair twisted_coproduct(int letter, const TruncPair& J) const;
  /// R = (J^op)^-1 (1 + h Omega / 2) J mod h^2.
  TruncPair r_matrix(const TruncPair& J) const;

  PairElem flip(const PairElem& t) const;  // Koszul-signed leg swap
  TruncPair trunc_mul(const TruncPair& a, const TruncPair& b) const;
  PairElem pair_mul(const PairElem& a, const PairElem& b) const;

  /// r as a PairElem (words of length one).
  PairElem r_pair() const;
  PairElem omega_pair() const;

  HadicReport verify(const std::string& seed_name) const;

 private:
  DoubleData dd_;
  int cap_;
  std::vector<int> order_u_, order_plus_, order_minus_;
  // phi's matrix on the bounded-degree bases, inverted once.
  std::vector<Word> u_basis_;
  std::vector<PairWord> mod_basis_;
  std::map<Word, std::size_t> u_index_;
  std::map<PairWord, std::size_t> mod_index_;
  std::vector<std::vector<Rat>> phi_inv_matrix_;

  PBWElem normal_form_in(const Word& w, const std::vector<int>& order) const;
  PairElem apply_letter(int letter, const PairElem& v) const;  // on M+ (x) M-
};

}  // namespace superquant
