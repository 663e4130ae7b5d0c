#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superquant/ratfunc.hpp"

namespace superquant {

/// Cartan data of a distinguished simple root system: matrix (a_ij), parity
/// set tau (at most one odd index), and symmetrizers d_i with d_1 = 1.
struct CartanDatum {
  int rank = 0;
  std::vector<std::vector<Rat>> a;  // rank x rank
  std::optional<int> tau;           // 1-based odd simple root index
  std::vector<Rat> d;
  std::string type_tag = "custom";  // "A(m|n)", "B_last_odd", "D(2,1;a)", "custom"
  std::optional<Rat> alpha;         // D(2,1;alpha) parameter
  std::string provenance;           // how the d_i convention was fixed

  bool is_odd(int i) const { return tau && *tau == i; }  // 1-based

  /// Root-of-q denominator: lcm of the denominators of d_i and d_i * a_ij,
  /// so every q-exponent used by the form lives in v = q^{1/L}.
  long unit_L() const;

  /// q_i = q^{d_i} as an exponent in v. 1-based.
  long qi_exp(int i) const;

  RatFunc q_power(const Rat& exponent) const;  // q^exponent as v-monomial
};

struct ValidationIssue {
  std::string message;
  std::vector<int> indices;  // 1-based witnesses, may be empty
};

struct ValidationReport {
  std::vector<ValidationIssue> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate(const CartanDatum& datum);

/// Super q-binomial coefficient [m+n choose n]_t as a Laurent polynomial,
/// computed from the product formula; t = v^t_exp.
Laurent q_binomial(int m_plus_n, int n, long t_exp = 1, long unit_L = 1);

/// Built-in distinguished data. sl(m|n) requires m, n >= 1 (m == n gives
/// the gl-style datum with the same simple-root combinatorics).
CartanDatum builtin_sl(int m, int n);
/// B(0,n) with odd last simple root; d = (1, ..., 1, 1/2).
CartanDatum builtin_b0n(int n);
/// D(2,1;alpha), rational alpha not in {0, -1}.
CartanDatum builtin_d21(const Rat& alpha);

}  // namespace superquant
