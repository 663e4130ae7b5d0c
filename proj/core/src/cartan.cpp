#include "superquant/cartan.hpp"

#include <numeric>

#include "superquant/errors.hpp"

namespace superquant {

long CartanDatum::unit_L() const {
  mpz_class l(1);
  auto absorb = [&l](const Rat& r) {
    mpz_class t;
    mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    l = t;
  };
  for (int i = 0; i < rank; ++i) {
    absorb(d[i]);
    for (int j = 0; j < rank; ++j) absorb(Rat(d[i] * a[i][j]));
  }
  return l.get_si();
}

long CartanDatum::qi_exp(int i) const {
  Rat e = d[i - 1] * unit_L();
  return mpz_class(e.get_num()).get_si();
}

RatFunc CartanDatum::q_power(const Rat& exponent) const {
  long L = unit_L();
  Rat e = exponent * L;
  if (e.get_den() != 1) throw std::logic_error("q_power: exponent not representable at unit_L");
  return RatFunc::q_power(e.get_num().get_si(), L);
}

ValidationReport validate(const CartanDatum& datum) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg, std::vector<int> idx = {}) {
    rep.failures.push_back({std::move(msg), std::move(idx)});
  };
  const int s = datum.rank;
  if (s <= 0) {
    fail("rank must be positive");
    return rep;
  }
  if ((int)datum.a.size() != s || (int)datum.d.size() != s) {
    fail("matrix or d dimension does not match rank");
    return rep;
  }
  for (int i = 0; i < s; ++i)
    if ((int)datum.a[i].size() != s) {
      fail("matrix row has wrong length", {i + 1});
      return rep;
    }
  if (datum.tau && (*datum.tau < 1 || *datum.tau > s)) fail("tau index out of range", {*datum.tau});
  if (datum.d[0] != 1) fail("d1 must be 1", {1});
  for (int i = 0; i < s; ++i)
    if (datum.d[i] == 0) fail("d_i must be nonzero", {i + 1});
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (datum.d[i] * datum.a[i][j] != datum.d[j] * datum.a[j][i]) {
        fail("not symmetrizable", {i + 1, j + 1});
        return rep;
      }
  if (datum.type_tag != "custom") {
    for (int i = 0; i < s; ++i)
      if (datum.a[i][i] != 0 && datum.a[i][i] != 2)
        fail("diagonal entry must be 0 or 2 for built-in data", {i + 1});
  }
  if (datum.alpha && (*datum.alpha == 0 || *datum.alpha == -1))
    fail("alpha must not be 0 or -1");
  return rep;
}

Laurent q_binomial(int m_plus_n, int n, long t_exp, long unit_L) {
  if (n < 0 || n > m_plus_n) throw std::logic_error("q_binomial: need 0 <= n <= m+n");
  RatFunc result(Rat(1));
  auto bracket = [&](long k) {
    // t^k - t^-k
    Laurent p = Laurent::monomial(Rat(1), k * t_exp, unit_L);
    p -= Laurent::monomial(Rat(1), -k * t_exp, unit_L);
    return RatFunc(p);
  };
  for (int i = 0; i < n; ++i) result *= bracket(m_plus_n - i) / bracket(i + 1);
  if (!result.is_polynomial()) throw std::logic_error("q_binomial: denominators did not cancel");
  return result.num();
}

CartanDatum builtin_sl(int m, int n) {
  if (m < 1 || n < 1) throw UnsupportedFamily("sl(m|n) needs m, n >= 1");
  CartanDatum datum;
  const int s = m + n - 1;
  datum.rank = s;
  datum.a.assign(s, std::vector<Rat>(s, Rat(0)));
  datum.d.assign(s, Rat(0));
  datum.tau = m;
  datum.type_tag = "A(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  datum.provenance = "derived from the sl(m|n) matrix model (h_i = [e_i, f_i], a_ij = alpha_j(h_i))";
  for (int i = 1; i <= s; ++i) {
    datum.a[i - 1][i - 1] = (i == m) ? Rat(0) : Rat(2);
    if (i + 1 <= s) datum.a[i - 1][i] = (i == m) ? Rat(1) : Rat(-1);
    if (i - 1 >= 1) datum.a[i - 1][i - 2] = Rat(-1);
    datum.d[i - 1] = (i <= m) ? Rat(1) : Rat(-1);
  }
  return datum;
}

CartanDatum builtin_b0n(int n) {
  if (n < 2) throw UnsupportedFamily("B(0,n) built-in needs n >= 2");
  CartanDatum datum;
  datum.rank = n;
  datum.a.assign(n, std::vector<Rat>(n, Rat(0)));
  datum.d.assign(n, Rat(1));
  datum.tau = n;
  datum.type_tag = "B_last_odd";
  datum.provenance =
      "symmetrized against the B-type bilinear form (alpha_i,alpha_i)=2 for i<n, "
      "(alpha_n,alpha_n)=1, (alpha_i,alpha_i+1)=-1";
  for (int i = 1; i <= n; ++i) {
    datum.a[i - 1][i - 1] = Rat(2);
    if (i + 1 <= n) datum.a[i - 1][i] = Rat(-1);
    if (i - 1 >= 1) datum.a[i - 1][i - 2] = (i == n) ? Rat(-2) : Rat(-1);
  }
  datum.d[n - 1] = rat(1, 2);
  return datum;
}

CartanDatum builtin_d21(const Rat& alpha) {
  if (alpha == 0 || alpha == -1) throw UnsupportedFamily("D(2,1;alpha) needs alpha not in {0,-1}");
  CartanDatum datum;
  datum.rank = 3;
  datum.tau = 1;
  datum.type_tag = "D(2,1;a)";
  datum.alpha = alpha;
  datum.provenance = "distinguished diagram with the odd root joining both even roots";
  datum.a = {{Rat(0), Rat(1), alpha}, {Rat(-1), Rat(2), Rat(0)}, {Rat(-1), Rat(0), Rat(2)}};
  datum.d = {Rat(1), Rat(-1), Rat(-alpha)};
  return datum;
}

}  // namespace superquant
