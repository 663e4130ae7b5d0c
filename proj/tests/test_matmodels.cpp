#include "doctest.h"
#include "superquant/errors.hpp"
#include "superquant/matmodels.hpp"

using namespace superquant;

TEST_CASE("supermatrix parity and bracket") {
  SuperMatrix e12 = matrix_unit(2, 1, 1, 2);
  SuperMatrix e23 = matrix_unit(2, 1, 2, 3);
  SuperMatrix e32 = matrix_unit(2, 1, 3, 2);
  CHECK(e12.parity() == 0);
  CHECK(e23.parity() == 1);
  CHECK((e12 + e23).parity() == -1);
  CHECK(SuperMatrix(2, 1).parity() == 0);

  // odd-odd bracket is the anticommutator
  SuperMatrix h = matrix_bracket(e23, e32);
  CHECK(h == matrix_unit(2, 1, 2, 2) + matrix_unit(2, 1, 3, 3));
  CHECK_THROWS_AS(matrix_bracket(e12 + e23, e12), NonHomogeneous);
}

TEST_CASE("supertrace flips sign on the odd block") {
  SuperMatrix x(2, 1);
  x.a[0][0] = 1;
  x.a[1][1] = 2;
  x.a[2][2] = 5;
  CHECK(supertrace(x) == Rat(-2));
  // str vanishes on brackets of homogeneous matrices
  SuperMatrix e13 = matrix_unit(2, 1, 1, 3);
  SuperMatrix e31 = matrix_unit(2, 1, 3, 1);
  CHECK(supertrace(matrix_bracket(e13, e31)) == Rat(0));
}

TEST_CASE("chevalley generators and defining relations") {
  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
    ModelReport rep = check_defining_relations(m, n);
    CHECK(rep.ok());
    if (!rep.ok())
      for (const auto& c : rep.checks)
        if (!c.pass) MESSAGE("sl(", m, "|", n, ") fails: ", c.label);
  }
  CHECK_THROWS_AS(chevalley(0, 2), UnsupportedShape);
}

TEST_CASE("str(h_i h_j) realizes the symmetrized Cartan matrix") {
  // t_i = d_i h_i is the str-dual of the simple root: str(t_i t_j) = d_i a_ij.
  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 2}}) {
    Chevalley ch = chevalley(m, n);
    CartanDatum d = cartan_from_model(m, n);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j)
        CHECK(d.d[i] * d.d[j] * supertrace_form(ch.h[i], ch.h[j]) == d.d[i] * d.a[i][j]);
  }
}

TEST_CASE("supertrace form is nondegenerate on the Cartan") {
  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
    const int N = m + n;
    // Gram matrix of the diagonal basis E_ii is diag(+1,...,-1,...): full rank.
    for (int i = 1; i <= N; ++i) {
      Rat diag = supertrace_form(matrix_unit(m, n, i, i), matrix_unit(m, n, i, i));
      CHECK(diag == (i <= m ? Rat(1) : Rat(-1)));
      for (int j = 1; j <= N; ++j)
        if (j != i)
          CHECK(supertrace_form(matrix_unit(m, n, i, i), matrix_unit(m, n, j, j)) == Rat(0));
    }
  }
}

TEST_CASE("manin triple structure on gl + Cartan") {
  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
    ModelReport rep = manin_check(m, n);
    CHECK(rep.ok());
    if (!rep.ok())
      for (const auto& c : rep.checks)
        if (!c.pass) MESSAGE("gl(", m, "|", n, ") fails: ", c.label);
  }
}

TEST_CASE("PBW weight counts") {
  // gl(2|1): positive roots a1 (even), a2 (odd), a1+a2 (odd).
  CHECK(pbw_weight_count(2, 1, Weight({1, 0})) == 1);
  CHECK(pbw_weight_count(2, 1, Weight({0, 1})) == 1);
  CHECK(pbw_weight_count(2, 1, Weight({1, 1})) == 2);  // E13 or E12*E23
  CHECK(pbw_weight_count(2, 1, Weight({0, 2})) == 0);  // odd root squares vanish
  CHECK(pbw_weight_count(2, 1, Weight({2, 1})) == 2);
  CHECK(pbw_weight_count(2, 1, Weight({2, 2})) == 1);  // E12 * E23 * E13 only
  CHECK(pbw_weight_count(2, 1, Weight({5, 0})) == 1);  // even root powers are free
  // gl(1|1): single odd root
  CHECK(pbw_weight_count(1, 1, Weight({1})) == 1);
  CHECK(pbw_weight_count(1, 1, Weight({2})) == 0);
  CHECK(pbw_weight_count(1, 1, Weight(std::vector<int>{0})) == 1);
}

TEST_CASE("datum read off the model is marked as derived") {
  CartanDatum d = cartan_from_model(2, 1);
  CHECK(validate(d).ok());
  CHECK(d.type_tag == "A(2|1)");
  CHECK_FALSE(d.provenance.empty());
}
