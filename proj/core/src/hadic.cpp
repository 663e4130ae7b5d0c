#include "superquant/hadic.hpp"

#include <algorithm>
#include <functional>

#include "superquant/errors.hpp"

namespace superquant {

namespace {

void add_word(PBWElem& e, const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = e.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

void add_pair(PairElem& e, const PairWord& k, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = e.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

PairElem pair_unit() {
  PairElem e;
  e[{Word{}, Word{}}] = 1;
  return e;
}

}  // namespace

HadicContext::HadicContext(DoubleData dd, int cap) : dd_(std::move(dd)), cap_(cap) {
  const int N = dd_.g.dim;
  const int n = dd_.n_plus;
  order_u_.resize(N);
  order_plus_.resize(N);
  order_minus_.resize(N);
  for (int l = 0; l < N; ++l) {
    order_u_[l] = l;
    // M+ = U(g-)1+: sort g- letters left, g+ letters sink to the right where
    // they annihilate 1+; M- is the mirror.
    order_plus_[l] = (l >= n) ? l - n : N + l;
    order_minus_[l] = l;
  }

  // Enumerate the bounded-degree PBW bases.
  std::function<void(std::vector<Word>&, Word&, int, int, int)> build =
      [&](std::vector<Word>& out, Word& cur, int next, int depth, int limit) {
        out.push_back(cur);
        if (depth == limit) return;
        for (int l = next; l < N; ++l) {
          if (dd_.g.parity[l] && !cur.empty() && cur.back() == l) continue;
          cur.push_back(l);
          build(out, cur, l, depth + 1, limit);
          cur.pop_back();
        }
      };
  Word scratch;
  build(u_basis_, scratch, 0, 0, cap_);
  std::vector<Word> plus_words, minus_words;
  // M+ words use g- letters only (already U-ordered among themselves).
  std::function<void(std::vector<Word>&, Word&, int, int, int, int, int)> build_range =
      [&](std::vector<Word>& out, Word& cur, int lo, int hi, int next, int depth, int limit) {
        out.push_back(cur);
        if (depth == limit) return;
        for (int l = std::max(lo, next); l < hi; ++l) {
          if (dd_.g.parity[l] && !cur.empty() && cur.back() == l) continue;
          cur.push_back(l);
          build_range(out, cur, lo, hi, l, depth + 1, limit);
          cur.pop_back();
        }
      };
  build_range(plus_words, scratch, n, N, n, 0, cap_);
  build_range(minus_words, scratch, 0, n, 0, 0, cap_);
  for (const Word& u : plus_words)
    for (const Word& v : minus_words)
      if (static_cast<int>(u.size() + v.size()) <= cap_) mod_basis_.push_back({u, v});

  if (u_basis_.size() != mod_basis_.size())
    throw SingularPhi("PBW basis sizes disagree between U(g) and M+ (x) M-");
  for (std::size_t i = 0; i < u_basis_.size(); ++i) u_index_[u_basis_[i]] = i;
  for (std::size_t i = 0; i < mod_basis_.size(); ++i) mod_index_[mod_basis_[i]] = i;

  const std::size_t D = u_basis_.size();
  std::vector<std::vector<Rat>> a(D, std::vector<Rat>(2 * D, Rat(0)));
  for (std::size_t col = 0; col < D; ++col) {
    PairElem image = phi(u_basis_[col]);
    for (const auto& [k, c] : image) a[mod_index_.at(k)][col] = c;
  }
  for (std::size_t i = 0; i < D; ++i) a[i][D + i] = 1;
  // Exact Gauss-Jordan inversion.
  for (std::size_t col = 0; col < D; ++col) {
    std::size_t piv = D;
    for (std::size_t r = col; r < D; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == D) throw SingularPhi("phi matrix singular; raise the degree cap");
    std::swap(a[col], a[piv]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < D; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < 2 * D; ++j) a[r][j] -= f * a[col][j];
    }
  }
  phi_inv_matrix_.assign(D, std::vector<Rat>(D, Rat(0)));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) phi_inv_matrix_[i][j] = a[i][D + j];
}

int HadicContext::parity_of(const Word& w) const {
  int p = 0;
  for (int l : w) p ^= dd_.g.parity[l];
  return p;
}

PBWElem HadicContext::normal_form_in(const Word& w, const std::vector<int>& order) const {
  if (static_cast<int>(w.size()) > cap_) throw CapExceeded("word length above PBW cap");
  const LieSBA& g = dd_.g;
  PBWElem result;
  std::vector<std::pair<Word, Rat>> work{{w, Rat(1)}};
  while (!work.empty()) {
    auto [word, coeff] = std::move(work.back());
    work.pop_back();
    std::size_t pos = word.size();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (order[word[i]] > order[word[i + 1]] ||
          (word[i] == word[i + 1] && g.parity[word[i]])) {
        pos = i;
        break;
      }
    }
    if (pos == word.size()) {
      add_word(result, word, coeff);
      continue;
    }
    int x = word[pos], y = word[pos + 1];
    if (x == y) {
      // Odd square: x*x = [x,x]/2.
      for (int k = 0; k < g.dim; ++k) {
        if (g.c[x][x][k] == 0) continue;
        Word next(word.begin(), word.begin() + pos);
        next.push_back(k);
        next.insert(next.end(), word.begin() + pos + 2, word.end());
        work.push_back({std::move(next), coeff * g.c[x][x][k] / 2});
      }
      continue;
    }
    Word swapped = word;
    std::swap(swapped[pos], swapped[pos + 1]);
    Rat s = (g.parity[x] && g.parity[y]) ? Rat(-1) : Rat(1);
    work.push_back({std::move(swapped), coeff * s});
    for (int k = 0; k < g.dim; ++k) {
      if (g.c[x][y][k] == 0) continue;
      Word next(word.begin(), word.begin() + pos);
      next.push_back(k);
      next.insert(next.end(), word.begin() + pos + 2, word.end());
      work.push_back({std::move(next), coeff * g.c[x][y][k]});
    }
  }
  return result;
}

PBWElem HadicContext::normal_form(const Word& w) const { return normal_form_in(w, order_u_); }

PBWElem HadicContext::mul(const PBWElem& a, const PBWElem& b) const {
  PBWElem r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [wn, cn] : normal_form(w)) add_word(r, wn, ca * cb * cn);
    }
  return r;
}

PBWElem HadicContext::verma_act(int letter, const PBWElem& v, bool plus) const {
  const int n = dd_.n_plus;
  const std::vector<int>& order = plus ? order_plus_ : order_minus_;
  PBWElem out;
  for (const auto& [w, c] : v) {
    Word lw;
    lw.push_back(letter);
    lw.insert(lw.end(), w.begin(), w.end());
    for (const auto& [wn, cn] : normal_form_in(lw, order)) {
      bool killed = false;
      for (int l : wn)
        if (plus ? (l < n) : (l >= n)) killed = true;
      if (!killed) add_word(out, wn, c * cn);
    }
  }
  return out;
}

PairElem HadicContext::apply_letter(int letter, const PairElem& v) const {
  PairElem out;
  int pl = dd_.g.parity[letter];
  for (const auto& [k, c] : v) {
    PBWElem u;
    u[k.first] = 1;
    for (const auto& [wn, cn] : verma_act(letter, u, true)) add_pair(out, {wn, k.second}, c * cn);
    PBWElem w;
    w[k.second] = 1;
    Rat s = (pl && parity_of(k.first)) ? Rat(-1) : Rat(1);
    for (const auto& [wn, cn] : verma_act(letter, w, false))
      add_pair(out, {k.first, wn}, c * cn * s);
  }
  return out;
}

PairElem HadicContext::phi(const Word& w) const {
  PairElem v = pair_unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_letter(*it, v);
  return v;
}

PBWElem HadicContext::phi_inverse(const PairElem& w) const {
  std::vector<Rat> coords(u_basis_.size(), Rat(0));
  for (const auto& [k, c] : w) {
    auto it = mod_index_.find(k);
    if (it == mod_index_.end()) throw CapExceeded("module element outside the bounded basis");
    for (std::size_t i = 0; i < u_basis_.size(); ++i) coords[i] += phi_inv_matrix_[i][it->second] * c;
  }
  PBWElem out;
  for (std::size_t i = 0; i < u_basis_.size(); ++i) add_word(out, u_basis_[i], coords[i]);
  return out;
}

TruncPair HadicContext::compute_J() const {
  const int N = dd_.g.dim;
  TruncPair j;
  j.c0 = pair_unit();
  // Vacuum 1+ (x) 1- (x) 1+ (x) 1-; Omega acts on legs 2 and 3. Both passed
  // legs are vacua of parity 0, so no Koszul signs arise at this order.
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (dd_.omega[a][b] == 0) continue;
      PBWElem leg2 = verma_act(a, PBWElem{{Word{}, Rat(1)}}, false);  // M- leg
      PBWElem leg3 = verma_act(b, PBWElem{{Word{}, Rat(1)}}, true);   // M+ leg
      if (leg2.empty() || leg3.empty()) continue;
      PairElem first, second;
      for (const auto& [wn, cn] : leg2) first[{Word{}, wn}] = cn;
      for (const auto& [wn, cn] : leg3) second[{wn, Word{}}] = cn;
      PBWElem x1 = phi_inverse(first);
      PBWElem x2 = phi_inverse(second);
      for (const auto& [w1, c1] : x1)
        for (const auto& [w2, c2] : x2)
          add_pair(j.c1, {w1, w2}, dd_.omega[a][b] * c1 * c2 / 2);
    }
  return j;
}

PairElem HadicContext::flip(const PairElem& t) const {
  PairElem out;
  for (const auto& [k, c] : t) {
    Rat s = (parity_of(k.first) && parity_of(k.second)) ? Rat(-1) : Rat(1);
    add_pair(out, {k.second, k.first}, c * s);
  }
  return out;
}

PairElem HadicContext::pair_mul(const PairElem& a, const PairElem& b) const {
  PairElem out;
  for (const auto& [ka, ca] : a) {
    int p2 = parity_of(ka.second);
    for (const auto& [kb, cb] : b) {
      Rat s = (p2 && parity_of(kb.first)) ? Rat(-1) : Rat(1);
      Word left = ka.first;
      left.insert(left.end(), kb.first.begin(), kb.first.end());
      Word right = ka.second;
      right.insert(right.end(), kb.second.begin(), kb.second.end());
      for (const auto& [wl, cl] : normal_form(left))
        for (const auto& [wr, cr] : normal_form(right))
          add_pair(out, {wl, wr}, ca * cb * s * cl * cr);
    }
  }
  return out;
}

TruncPair HadicContext::trunc_mul(const TruncPair& a, const TruncPair& b) const {
  TruncPair out;
  out.c0 = pair_mul(a.c0, b.c0);
  out.c1 = pair_mul(a.c0, b.c1);
  for (const auto& [k, c] : pair_mul(a.c1, b.c0)) add_pair(out.c1, k, c);
  return out;
}

TruncPair HadicContext::twisted_coproduct(int letter, const TruncPair& J) const {
  if (J.c0 != pair_unit()) throw AxiomFailure("twist is not unital at order h^0");
  TruncPair jinv;
  jinv.c0 = pair_unit();
  for (const auto& [k, c] : J.c1) jinv.c1[k] = -c;
  TruncPair d0;
  d0.c0[{Word{letter}, Word{}}] = 1;
  d0.c0[{Word{}, Word{letter}}] = 1;
  return trunc_mul(trunc_mul(jinv, d0), J);
}

TruncPair HadicContext::r_matrix(const TruncPair& J) const {
  if (J.c0 != pair_unit()) throw AxiomFailure("twist is not unital at order h^0");
  TruncPair jop_inv;
  jop_inv.c0 = pair_unit();
  for (const auto& [k, c] : flip(J.c1)) jop_inv.c1[k] = -c;
  TruncPair mid;
  mid.c0 = pair_unit();
  for (const auto& [k, c] : omega_pair()) mid.c1[k] = c / 2;
  return trunc_mul(trunc_mul(jop_inv, mid), J);
}

PairElem HadicContext::r_pair() const {
  PairElem out;
  const int N = dd_.g.dim;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (dd_.r[a][b] != 0) out[{Word{a}, Word{b}}] = dd_.r[a][b];
  return out;
}

PairElem HadicContext::omega_pair() const {
  PairElem out;
  const int N = dd_.g.dim;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (dd_.omega[a][b] != 0) out[{Word{a}, Word{b}}] = dd_.omega[a][b];
  return out;
}

HadicReport HadicContext::verify(const std::string& seed_name) const {
  HadicReport rep;
  rep.seed = seed_name;
  const int N = dd_.g.dim;

  TruncPair J = compute_J();
  PairElem half_r;
  for (const auto& [k, c] : r_pair()) half_r[k] = c / 2;
  rep.j_matches_lemma = (J.c0 == pair_unit() && J.c1 == half_r);
  if (!rep.j_matches_lemma) rep.failures.push_back("J != 1 + rh/2");

  TruncPair R = r_matrix(J);
  rep.r_matches = (R.c0 == pair_unit() && R.c1 == r_pair());
  if (!rep.r_matches) rep.failures.push_back("R != 1 + hr");

  rep.cobracket_matches = true;
  rep.intertwiner_matches = true;
  for (int x = 0; x < N; ++x) {
    TruncPair D = twisted_coproduct(x, J);
    TruncPair Dop;
    Dop.c0 = flip(D.c0);
    Dop.c1 = flip(D.c1);

    PairElem diff = D.c1;
    for (const auto& [k, c] : Dop.c1) add_pair(diff, k, -c);
    PairElem expected;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (dd_.g.delta[x][a][b] != 0) expected[{Word{a}, Word{b}}] = dd_.g.delta[x][a][b];
    bool symmetric_c0 = (D.c0 == Dop.c0);
    if (!symmetric_c0 || diff != expected) {
      rep.cobracket_matches = false;
      rep.failures.push_back("(Delta - Delta_op)/h != delta at basis " + std::to_string(x + 1));
    }

    TruncPair lhs = trunc_mul(R, D);
    TruncPair rhs = trunc_mul(Dop, R);
    if (lhs.c0 != rhs.c0 || lhs.c1 != rhs.c1) {
      rep.intertwiner_matches = false;
      rep.failures.push_back("R Delta != Delta_op R at basis " + std::to_string(x + 1));
    }
  }

  // Gauge/counit: (eps (x) id)J = (id (x) eps)J = 1, and (eps (x) id)Delta(x) = x.
  rep.gauge_ok = true;
  PBWElem left_eps, right_eps;
  for (const auto& [k, c] : J.c1) {
    if (k.first.empty()) add_word(left_eps, k.second, c);
    if (k.second.empty()) add_word(right_eps, k.first, c);
  }
  if (!left_eps.empty() || !right_eps.empty()) {
    rep.gauge_ok = false;
    rep.failures.push_back("(eps (x) id)J != 1");
  }
  for (int x = 0; x < N && rep.gauge_ok; ++x) {
    TruncPair D = twisted_coproduct(x, J);
    PBWElem c0_part, c1_part;
    for (const auto& [k, c] : D.c0)
      if (k.first.empty()) add_word(c0_part, k.second, c);
    for (const auto& [k, c] : D.c1)
      if (k.first.empty()) add_word(c1_part, k.second, c);
    PBWElem expect;
    expect[Word{x}] = 1;
    if (c0_part != expect || !c1_part.empty()) {
      rep.gauge_ok = false;
      rep.failures.push_back("(eps (x) id)Delta != id at basis " + std::to_string(x + 1));
    }
  }
  return rep;
}

}  // namespace superquant
