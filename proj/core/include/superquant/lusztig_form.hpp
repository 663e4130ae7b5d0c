#pragma once

#include <vector>

#include "superquant/freesuper.hpp"

namespace superquant {

/// Gram matrix of the form C on one weight component of f'.
struct GramBlock {
  Weight weight{0};
  std::vector<Monomial> basis;               // deglex order
  std::vector<std::vector<RatFunc>> matrix;  // entry (i,j) = C(basis_i, basis_j)
  int rank = 0;
  int corank() const { return static_cast<int>(basis.size()) - rank; }
};

struct PairingEntry {
  Monomial summand;
  RatFunc relation_coeff;  // coefficient of the summand inside the relation
  RatFunc pairing;         // C(x, summand)
};

/// Exact rank of a RatFunc matrix by fraction-free (Bareiss) elimination on
/// the denominator-cleared Laurent matrix.
int matrix_rank(std::vector<std::vector<RatFunc>> m);

/// The bilinear form C on the free superalgebra, its Gram blocks and the
/// kernel tests that cut out f = f'/Ker(C).
class LusztigForm {
 public:
  explicit LusztigForm(const FreeAlgebra& algebra, int degree_cap = 8);

  const FreeAlgebra& algebra() const { return alg_; }
  int degree_cap() const { return cap_; }

  /// C(theta_i, theta_j): c_i = (q_i - q_i^-1)^-1 off the odd root, 1 at it.
  RatFunc generator_value(int i) const;  // 0-based

  RatFunc form(const Monomial& x, const Monomial& y) const;
  RatFunc form(const FreeElem& x, const FreeElem& y) const;
  /// Form on f' (x) f' with the Koszul sign rule.
  RatFunc form_tensor(const TensorElem& x, const TensorElem& y) const;

  GramBlock gram(const Weight& weight) const;  // throws CapExceeded
  bool kernel_member(const FreeElem& x) const;  // throws NonHomogeneous
  std::vector<PairingEntry> pairing_table(const Monomial& x, const FreeElem& rel) const;
  std::vector<Monomial> quotient_basis(const Weight& weight) const;  // throws CapExceeded

 private:
  const FreeAlgebra& alg_;
  int cap_;
  mutable std::recursive_mutex memo_mu_;
  mutable std::map<std::pair<Monomial, Monomial>, RatFunc, DegLex> memo_;
};

}  // namespace superquant
