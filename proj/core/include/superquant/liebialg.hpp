#pragma once

#include <string>
#include <vector>

#include "superquant/rational.hpp"

namespace superquant {

using TwoTensor = std::vector<std::vector<Rat>>;
using ThreeTensor = std::vector<std::vector<std::vector<Rat>>>;

/// Finite-dimensional Lie superbialgebra by structure constants:
/// [x_i, x_j] = sum_k c[i][j][k] x_k, delta(x_i) = sum delta[i][j][k] x_j (x) x_k.
struct LieSBA {
  std::string name;
  int dim = 0;
  std::vector<int> parity;
  std::vector<std::vector<std::vector<Rat>>> c;
  std::vector<std::vector<std::vector<Rat>>> delta;

  static LieSBA zeroed(std::string name, std::vector<int> parity);
};

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Parity preservation, super-antisymmetry, super-Jacobi over all triples.
AxiomReport check_lie(const LieSBA& g);
/// Cobracket parity, co-antisymmetry, co-Jacobi (as Jacobi of the dual
/// bracket), and the cocycle condition over all pairs.
AxiomReport check_bialgebra(const LieSBA& g);

/// Drinfeld double of g_plus: basis p_1..p_n then m_1..m_n (dual), with the
/// mixed bracket through the coadjoint actions; canonically quasitriangular
/// with r = sum p_i (x) m_i and Casimir omega = r + tau(r).
struct DoubleData {
  LieSBA g;
  int n_plus = 0;
  TwoTensor r, omega;
};

DoubleData make_double(const LieSBA& g_plus);  // throws AxiomFailure

/// tau(v (x) w) = (-1)^{p_v p_w} w (x) v applied to a two-tensor.
TwoTensor tau_flip(const TwoTensor& t, const std::vector<int>& parity);
bool tensor_is_zero(const TwoTensor& t);
bool tensor_is_zero(const ThreeTensor& t);

/// [r12,r13] + [r12,r23] + [r13,r23] for an even two-tensor r.
ThreeTensor cyb(const TwoTensor& r, const LieSBA& g);

/// omega even, tau-symmetric, and ad-invariant.
AxiomReport casimir_checks(const DoubleData& dd);

/// The cobracket x -> [x (x) 1 + 1 (x) x, r].
std::vector<std::vector<std::vector<Rat>>> coboundary(const TwoTensor& r, const LieSBA& g);

struct UpsilonReport {
  bool homomorphism = false;
  bool preserves_r = false;
  int restriction_sign = 0;  // upsilon restricted to g_plus is this multiple of id
  std::vector<std::string> failures;
  bool ok() const { return homomorphism && preserves_r; }
};

/// The map upsilon(x + f) = -x - (1 (x) f) r from D(g_plus) to g_plus, checked
/// as a bracket homomorphism on all basis pairs together with r-preservation.
/// Throws NotQuasitriangular when cyb(r) != 0 or r + tau(r) is not invariant.
UpsilonReport upsilon_check(const LieSBA& g_plus_lie, const TwoTensor& r_plus);

// Seed superbialgebras.
LieSBA seed_even_abelian();
LieSBA seed_odd_abelian();
LieSBA seed_sl2_borel();   // {h, e}, [h,e] = 2e, delta(e) = (h^e)/2
LieSBA seed_mixed_11();    // {x even, y odd}, [x,y] = y, delta(x) = 2 y(x)y
std::vector<LieSBA> seed_bialgebras();

/// Quasitriangular seeds: Lie data plus an r-matrix whose coboundary is the
/// cobracket; used as inputs to upsilon_check.
struct QTSeed {
  LieSBA g;  // delta = coboundary(r)
  TwoTensor r;
};
std::vector<QTSeed> seed_quasitriangular();

}  // namespace superquant
