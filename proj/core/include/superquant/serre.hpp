#pragma once

#include <string>
#include <vector>

#include "superquant/freesuper.hpp"
#include "superquant/lusztig_form.hpp"

namespace superquant {

struct Relation {
  std::string label;  // "A(i)", "A2(i,j)", "B(i,j)", "C", "D", "classical-..."
  FreeElem elem;
};

struct RelationSet {
  CartanDatum datum;
  std::vector<Relation> relations;
  char side = 'E';  // F-side sets carry the same words with side = 'F'
};

/// Defining quantum Serre-type relations for the datum, E-side.
RelationSet quantum_serre(const CartanDatum& datum);

/// F-side mirror: identical coefficients, generators read as f_i.
RelationSet f_side(const RelationSet& e_side);

/// Classical super Serre-type relations expanded as associative words with
/// rational coefficients (the super bracket [x,y] = xy - (-1)^{p_x p_y} yx
/// expanded recursively).
RelationSet classical_serre(const CartanDatum& datum);

/// Super bracket of two homogeneous free elements.
FreeElem super_bracket(const FreeElem& x, const FreeElem& y, const CartanDatum& datum);

struct KernelCheck {
  std::string label;
  Weight weight{0};
  bool in_kernel = false;
  double seconds = 0.0;
};

struct SliceCheck {
  Weight weight{0};
  int basis_dim = 0;
  int slice_dim = 0;  // dim of span{u * rho * v} at this weight
  int corank = 0;     // corank of the Gram block
  bool match = false;
};

struct VerificationReport {
  std::vector<KernelCheck> kernels;
  std::vector<SliceCheck> slices;
  bool ok() const;
};

/// Kernel membership of every generated relation, plus the degreewise
/// comparison ideal-slice dimension == Gram corank for all weights of total
/// degree <= cap.
VerificationReport verify_kernel(const CartanDatum& datum, int cap);

/// All weights with the given rank and total degree in [1, cap].
std::vector<Weight> weights_up_to(int rank, int cap);

}  // namespace superquant
