#pragma once

#include <map>
#include <string>
#include <vector>

#include "superquant/cartan.hpp"
#include "superquant/freesuper.hpp"

namespace superquant {

/// Element of gl(m|n) in the defining representation. Parity of a
/// block-homogeneous matrix is 0 on the diagonal blocks, 1 off them.
struct SuperMatrix {
  int m = 0, n = 0;
  std::vector<std::vector<Rat>> a;

  SuperMatrix() = default;
  SuperMatrix(int m_, int n_);
  int size() const { return m + n; }
  bool is_zero() const;
  /// 0, 1, or -1 when the support straddles both parities.
  int parity() const;

  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix scaled(const Rat& c) const;
  bool operator==(const SuperMatrix& o) const { return m == o.m && n == o.n && a == o.a; }
};

SuperMatrix matrix_unit(int m, int n, int i, int j);  // E_{ij}, 1-based
Rat supertrace(const SuperMatrix& x);
Rat supertrace_form(const SuperMatrix& x, const SuperMatrix& y);  // str(xy)
/// [x,y] = xy - (-1)^{p_x p_y} yx on homogeneous matrices.
SuperMatrix matrix_bracket(const SuperMatrix& x, const SuperMatrix& y);

struct Chevalley {
  int m = 0, n = 0;
  std::vector<SuperMatrix> e, f, h;  // s = m + n - 1 of each
};

Chevalley chevalley(int m, int n);  // throws UnsupportedShape for m, n < 1

struct ModelCheck {
  std::string label;
  bool pass = false;
};

struct ModelReport {
  std::vector<ModelCheck> checks;
  bool ok() const;
};

/// Bracket relations of the Chevalley generators plus the classical
/// Serre-type relations, evaluated to matrices.
ModelReport check_defining_relations(int m, int n);

/// Cartan datum read off the matrix model: a_ij from [h_i, e_j] = a_ij e_j,
/// d_i solved from d_i a_ij = d_j a_ji with d_1 = 1.
CartanDatum cartan_from_model(int m, int n);

/// Manin-triple verification for gl(m|n) + Cartan with form (,) - (,)_h:
/// isotropy of both Borel embeddings, supersymmetry, invariance, and
/// nondegeneracy across the split.
ModelReport manin_check(int m, int n);

/// Number of PBW monomials of the given simple-root weight in U(n+) built
/// from the positive root vectors of gl(m|n) (odd roots enter at most once).
long pbw_weight_count(int m, int n, const Weight& w);

}  // namespace superquant
