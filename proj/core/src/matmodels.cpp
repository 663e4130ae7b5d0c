#include "superquant/matmodels.hpp"

#include <sstream>

#include "superquant/errors.hpp"
#include "superquant/serre.hpp"

namespace superquant {

SuperMatrix::SuperMatrix(int m_, int n_)
    : m(m_), n(n_), a(m_ + n_, std::vector<Rat>(m_ + n_, Rat(0))) {}

bool SuperMatrix::is_zero() const {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

int SuperMatrix::parity() const {
  bool even = false, odd = false;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (a[i][j] == 0) continue;
      ((i < m) == (j < m) ? even : odd) = true;
    }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  SuperMatrix r = *this;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) r.a[i][j] += o.a[i][j];
  return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  SuperMatrix r = *this;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) r.a[i][j] -= o.a[i][j];
  return r;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  SuperMatrix r(m, n);
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < size(); ++j) r.a[i][j] += a[i][k] * o.a[k][j];
    }
  return r;
}

SuperMatrix SuperMatrix::scaled(const Rat& c) const {
  SuperMatrix r = *this;
  for (auto& row : r.a)
    for (auto& x : row) x *= c;
  return r;
}

SuperMatrix matrix_unit(int m, int n, int i, int j) {
  SuperMatrix r(m, n);
  r.a[i - 1][j - 1] = 1;
  return r;
}

Rat supertrace(const SuperMatrix& x) {
  Rat s(0);
  for (int i = 0; i < x.m; ++i) s += x.a[i][i];
  for (int i = x.m; i < x.size(); ++i) s -= x.a[i][i];
  return s;
}

Rat supertrace_form(const SuperMatrix& x, const SuperMatrix& y) { return supertrace(x * y); }

SuperMatrix matrix_bracket(const SuperMatrix& x, const SuperMatrix& y) {
  int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw NonHomogeneous("matrix bracket of non-homogeneous matrices");
  SuperMatrix yx = y * x;
  return (px && py) ? x * y + yx : x * y - yx;
}

Chevalley chevalley(int m, int n) {
  if (m < 1 || n < 1) throw UnsupportedShape("need m, n >= 1");
  Chevalley c;
  c.m = m;
  c.n = n;
  for (int i = 1; i <= m + n - 1; ++i) {
    c.e.push_back(matrix_unit(m, n, i, i + 1));
    c.f.push_back(matrix_unit(m, n, i + 1, i));
    c.h.push_back(matrix_bracket(c.e.back(), c.f.back()));
  }
  return c;
}

bool ModelReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Evaluate an associative word expansion in the e-generators.
SuperMatrix evaluate_word(const FreeElem& elem, const Chevalley& ch) {
  SuperMatrix total(ch.m, ch.n);
  for (const auto& [mono, coeff] : elem) {
    SuperMatrix prod(ch.m, ch.n);
    for (int i = 0; i < prod.size(); ++i) prod.a[i][i] = 1;
    for (auto l : mono.letters) prod = prod * ch.e[l];
    total = total + prod.scaled(coeff.specialize_q1());
  }
  return total;
}

}  // namespace

ModelReport check_defining_relations(int m, int n) {
  Chevalley ch = chevalley(m, n);
  CartanDatum datum = cartan_from_model(m, n);
  const int s = m + n - 1;
  ModelReport rep;
  auto add = [&rep](std::string label, bool pass) { rep.checks.push_back({std::move(label), pass}); };

  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      add("[h_i,h_j]=0 " + ij, matrix_bracket(ch.h[i], ch.h[j]).is_zero());
      SuperMatrix ef = matrix_bracket(ch.e[i], ch.f[j]);
      add("[e_i,f_j]=d_ij h_i " + ij, ef == (i == j ? ch.h[i] : SuperMatrix(m, n)));
      SuperMatrix he = matrix_bracket(ch.h[i], ch.e[j]) - ch.e[j].scaled(datum.a[i][j]);
      add("[h_i,e_j]=a_ij e_j " + ij, he.is_zero());
      SuperMatrix hf = matrix_bracket(ch.h[i], ch.f[j]) + ch.f[j].scaled(datum.a[i][j]);
      add("[h_i,f_j]=-a_ij f_j " + ij, hf.is_zero());
    }

  for (const auto& rel : classical_serre(datum).relations)
    add(rel.label, evaluate_word(rel.elem, ch).is_zero());
  return rep;
}

CartanDatum cartan_from_model(int m, int n) {
  Chevalley ch = chevalley(m, n);
  const int s = m + n - 1;
  CartanDatum datum;
  datum.rank = s;
  datum.a.assign(s, std::vector<Rat>(s, Rat(0)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      // a_ij is the coefficient of e_j in [h_i, e_j], read at entry (j, j+1).
      SuperMatrix he = matrix_bracket(ch.h[i], ch.e[j]);
      datum.a[i][j] = he.a[j][j + 1];
    }
  }
  datum.tau = m;  // e_m crosses the block boundary
  datum.d.assign(s, Rat(0));
  datum.d[0] = 1;
  // The A-type Dynkin chain is connected, so d propagates along it.
  for (int i = 1; i < s; ++i) datum.d[i] = datum.d[i - 1] * datum.a[i - 1][i] / datum.a[i][i - 1];
  datum.type_tag = "A(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  datum.provenance = "read off [h_i, e_j] in gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return datum;
}

ModelReport manin_check(int m, int n) {
  const int N = m + n;
  ModelReport rep;
  auto add = [&rep](std::string label, bool pass) { rep.checks.push_back({std::move(label), pass}); };

  // Elements of g (+) h as a pair (full matrix, Cartan part); the form is
  // str(xy) - str(ab) and h carries the restricted supertrace form.
  struct Elem {
    SuperMatrix x, c;
  };
  auto diag_part = [&](const SuperMatrix& x) {
    SuperMatrix d(m, n);
    for (int i = 0; i < N; ++i) d.a[i][i] = x.a[i][i];
    return d;
  };
  // Note the explicit Rat: gmpxx expression templates must not outlive the
  // supertrace_form temporaries.
  auto form = [&](const Elem& u, const Elem& v) -> Rat {
    return Rat(supertrace_form(u.x, v.x) - supertrace_form(u.c, v.c));
  };

  // Spanning set of g (+) h: (E_ij, 0) and (0, E_ii).
  std::vector<Elem> basis;
  std::vector<int> par;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      basis.push_back({matrix_unit(m, n, i, j), SuperMatrix(m, n)});
      par.push_back(((i <= m) != (j <= m)) ? 1 : 0);
    }
  for (int i = 1; i <= N; ++i) {
    basis.push_back({SuperMatrix(m, n), matrix_unit(m, n, i, i)});
    par.push_back(0);
  }

  bool supersym = true;
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t v = 0; v < basis.size(); ++v) {
      Rat lhs = form(basis[u], basis[v]);
      Rat rhs = form(basis[v], basis[u]);
      if (par[u] && par[v]) rhs = -rhs;
      if (lhs != rhs) supersym = false;
    }
  add("form supersymmetric", supersym);

  auto elem_bracket = [&](const Elem& u, int pu, const Elem& v, int pv) {
    SuperMatrix xy = u.x * v.x;
    SuperMatrix yx = v.x * u.x;
    SuperMatrix full = (pu && pv) ? xy + yx : xy - yx;
    return Elem{full, SuperMatrix(m, n)};  // h is abelian and central in itself
  };
  // Invariance only involves the g component of brackets; the h copy is
  // abelian so ([a,b], ...) with a, b in h vanishes on both sides.
  bool invariant = true;
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t v = 0; v < basis.size(); ++v)
      for (std::size_t w = 0; w < basis.size(); ++w) {
        Elem uv = elem_bracket(basis[u], par[u], basis[v], par[v]);
        Elem vw = elem_bracket(basis[v], par[v], basis[w], par[w]);
        if (form(uv, basis[w]) != form(basis[u], vw)) invariant = false;
      }
  add("form invariant", invariant);

  // eta_pm(E_ij) = (E_ij, diag part); isotropy of both Borel images.
  bool plus_isotropic = true, minus_isotropic = true;
  std::vector<Elem> bplus, bminus;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      SuperMatrix x = matrix_unit(m, n, i, j);
      bplus.push_back({x, diag_part(x)});
      SuperMatrix y = matrix_unit(m, n, j, i);
      bminus.push_back({y, diag_part(y).scaled(Rat(-1))});
    }
  for (const auto& u : bplus)
    for (const auto& v : bplus)
      if (form(u, v) != 0) plus_isotropic = false;
  for (const auto& u : bminus)
    for (const auto& v : bminus)
      if (form(u, v) != 0) minus_isotropic = false;
  add("eta+(b+) isotropic", plus_isotropic);
  add("eta-(b-) isotropic", minus_isotropic);

  // Nondegeneracy across the split: every eta+ basis vector pairs nontrivially
  // with some eta- one.
  bool cross = true;
  for (const auto& u : bplus) {
    bool hit = false;
    for (const auto& v : bminus)
      if (form(u, v) != 0) hit = true;
    if (!hit) cross = false;
  }
  add("cross pairing nondegenerate", cross);
  return rep;
}

long pbw_weight_count(int m, int n, const Weight& w) {
  const int N = m + n;
  const int s = N - 1;
  // Positive roots: pairs a < b with weight alpha_a + ... + alpha_{b-1};
  // odd iff the root vector E_ab crosses the block boundary.
  std::map<Weight, long> counts;
  counts[Weight(s)] = 1;
  for (int a = 1; a <= N; ++a) {
    for (int b = a + 1; b <= N; ++b) {
      Weight root(s);
      for (int k = a; k < b; ++k) root.nu[k - 1] = 1;
      bool odd = (a <= m) && (b > m);
      std::map<Weight, long> next;
      for (const auto& [wt, cnt] : counts) {
        Weight cur = wt;
        int mult = 0;
        while (true) {
          if (cur.total() > w.total()) break;
          bool fits = true;
          for (int k = 0; k < s; ++k)
            if (cur.nu[k] > w.nu[k]) fits = false;
          if (fits) next[cur] += cnt;
          if (odd && mult == 1) break;
          cur = cur + root;
          ++mult;
        }
      }
      counts = std::move(next);
    }
  }
  auto it = counts.find(w);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace superquant
