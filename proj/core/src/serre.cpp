#include "superquant/serre.hpp"

#include <algorithm>
#include <chrono>

#include "superquant/errors.hpp"

namespace superquant {

namespace {

Monomial power(int i, int k) {
  Monomial m;
  m.letters.assign(k, static_cast<std::uint8_t>(i));
  return m;
}

FreeElem mono_elem(const Monomial& m) {
  FreeElem e;
  e[m] = RatFunc(Rat(1));
  return e;
}

}  // namespace

FreeElem super_bracket(const FreeElem& x, const FreeElem& y, const CartanDatum& datum) {
  FreeElem r = free_mul(x, y);
  FreeElem yx = free_mul(y, x);
  // Parities of the factors, read off any monomial (bracket arguments are
  // parity-homogeneous words in the generators).
  int px = x.empty() ? 0 : x.begin()->first.parity(datum);
  int py = y.empty() ? 0 : y.begin()->first.parity(datum);
  return (px && py) ? r + yx : r - yx;
}

RelationSet quantum_serre(const CartanDatum& datum) {
  RelationSet set{datum, {}, 'E'};
  const int s = datum.rank;
  const long L = datum.unit_L();

  for (int i = 1; i <= s; ++i) {
    if (datum.is_odd(i) && datum.a[i - 1][i - 1] == 0) {
      set.relations.push_back({"A(" + std::to_string(i) + ")", mono_elem(power(i - 1, 2))});
    }
  }
  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      if (datum.a[i - 1][j - 1] != 0) continue;
      FreeElem rel = mono_elem(Monomial::generator(i - 1) * Monomial::generator(j - 1));
      int sign = (datum.is_odd(i) && datum.is_odd(j)) ? 1 : -1;
      RatFunc c{Rat(sign)};
      rel = rel + c * mono_elem(Monomial::generator(j - 1) * Monomial::generator(i - 1));
      set.relations.push_back({"A2(" + std::to_string(i) + "," + std::to_string(j) + ")", rel});
    }
  }
  for (int i = 1; i <= s; ++i) {
    if (datum.is_odd(i)) continue;
    for (int j = 1; j <= s; ++j) {
      if (j == i || datum.a[i - 1][j - 1] == 0) continue;
      Rat aij = datum.a[i - 1][j - 1];
      long nij = mpz_class(abs(aij.get_num())).get_si();  // |a_ij|, integral for built-ins
      int top = static_cast<int>(1 + nij);
      FreeElem rel;
      for (int v = 0; v <= top; ++v) {
        Laurent coef = q_binomial(top, v, datum.qi_exp(i), L);
        if (v % 2) coef = -coef;
        Monomial m = power(i - 1, top - v) * Monomial::generator(j - 1) * power(i - 1, v);
        rel = rel + RatFunc(coef) * mono_elem(m);
      }
      set.relations.push_back({"B(" + std::to_string(i) + "," + std::to_string(j) + ")", rel});
    }
  }
  if (datum.tau) {
    int m = *datum.tau;
    if (m - 1 >= 1 && m + 1 <= s && datum.a[m - 1][m - 1] == 0) {
      int tm = m - 1, tl = m - 2, tr = m;  // 0-based: theta_m, theta_{m-1}, theta_{m+1}
      auto word = [&](std::initializer_list<int> ls) {
        Monomial mm;
        for (int l : ls) mm.letters.push_back(static_cast<std::uint8_t>(l));
        return mono_elem(mm);
      };
      Laurent q1 = Laurent::monomial(Rat(1), L, L) + Laurent::monomial(Rat(1), -L, L);
      FreeElem rel = word({tm, tl, tm, tr}) + word({tm, tr, tm, tl}) + word({tl, tm, tr, tm}) +
                     word({tr, tm, tl, tm}) - RatFunc(q1) * word({tm, tl, tr, tm});
      set.relations.push_back({"C", rel});
    }
    if (datum.type_tag == "B_last_odd" && m == s && m >= 2) {
      int tm = m - 1, tl = m - 2;
      Laurent c = Laurent::monomial(Rat(1), L, L) + Laurent::monomial(Rat(1), -L, L) -
                  Laurent::one().rescaled(L);
      FreeElem rel = mono_elem(Monomial::generator(tl) * power(tm, 3)) +
                     mono_elem(power(tm, 3) * Monomial::generator(tl)) -
                     RatFunc(c) * (mono_elem(Monomial::generator(tm) * Monomial::generator(tl) * power(tm, 2)) +
                                   mono_elem(power(tm, 2) * Monomial::generator(tl) * Monomial::generator(tm)));
      set.relations.push_back({"D", rel});
    }
  }
  return set;
}

RelationSet f_side(const RelationSet& e_side) {
  RelationSet f = e_side;
  f.side = 'F';
  return f;
}

RelationSet classical_serre(const CartanDatum& datum) {
  RelationSet set{datum, {}, 'E'};
  const int s = datum.rank;
  auto gen = [](int i) { return mono_elem(Monomial::generator(i - 1)); };  // 1-based

  for (int i = 1; i <= s; ++i)
    if (datum.is_odd(i))
      set.relations.push_back(
          {"classical-odd-square(" + std::to_string(i) + ")", super_bracket(gen(i), gen(i), datum)});

  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      if (datum.a[i - 1][j - 1] != 0) continue;
      set.relations.push_back({"classical-commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
                               super_bracket(gen(i), gen(j), datum)});
    }
  }
  for (int i = 1; i <= s; ++i) {
    if (datum.is_odd(i)) continue;
    for (int j = 1; j <= s; ++j) {
      if (j == i || datum.a[i - 1][j - 1] == 0) continue;
      Rat aij = datum.a[i - 1][j - 1];
      long nij = mpz_class(abs(aij.get_num())).get_si();
      FreeElem rel = gen(j);
      for (long k = 0; k < 1 + nij; ++k) rel = super_bracket(gen(i), rel, datum);
      set.relations.push_back(
          {"classical-ad(" + std::to_string(i) + "," + std::to_string(j) + ")", rel});
    }
  }
  if (datum.tau) {
    int m = *datum.tau;
    if (m - 1 >= 1 && m + 1 <= s && datum.a[m - 1][m - 1] == 0) {
      FreeElem rel = super_bracket(
          gen(m), super_bracket(gen(m - 1), super_bracket(gen(m), gen(m + 1), datum), datum), datum);
      set.relations.push_back({"classical-C", rel});
    }
    if (datum.type_tag == "B_last_odd" && m == s && m >= 2) {
      FreeElem rel = super_bracket(
          super_bracket(super_bracket(gen(m - 1), gen(m), datum), gen(m), datum), gen(m), datum);
      set.relations.push_back({"classical-D", rel});
    }
  }
  return set;
}

std::vector<Weight> weights_up_to(int rank, int cap) {
  std::vector<Weight> out;
  Weight w(rank);
  // Odometer over compositions with total degree in [1, cap].
  while (true) {
    int i = 0;
    while (i < rank) {
      ++w.nu[i];
      if (w.total() <= cap) break;
      w.nu[i] = 0;
      ++i;
    }
    if (i == rank) break;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.nu < b.nu;
  });
  return out;
}

VerificationReport verify_kernel(const CartanDatum& datum, int cap) {
  FreeAlgebra alg(datum);
  LusztigForm form(alg, cap);
  RelationSet rels = quantum_serre(datum);
  VerificationReport rep;

  for (const auto& rel : rels.relations) {
    Weight w = weight_of(rel.elem, datum.rank);
    if (w.total() > cap) throw CapExceeded("relation weight above cap: " + rel.label);
    auto t0 = std::chrono::steady_clock::now();
    bool in = form.kernel_member(rel.elem);
    auto t1 = std::chrono::steady_clock::now();
    rep.kernels.push_back({rel.label, w, in, std::chrono::duration<double>(t1 - t0).count()});
  }

  for (const Weight& w : weights_up_to(datum.rank, cap)) {
    GramBlock block = form.gram(w);
    // Span of u * rho * v at weight w, by incremental elimination over the
    // monomial basis of the block.
    std::vector<std::vector<RatFunc>> rows;
    std::map<Monomial, std::size_t, DegLex> index;
    for (std::size_t k = 0; k < block.basis.size(); ++k) index[block.basis[k]] = k;
    std::vector<std::vector<RatFunc>> echelon;
    std::vector<long> pivots;
    int dim = 0;
    for (const auto& rel : rels.relations) {
      Weight wr = weight_of(rel.elem, datum.rank);
      Weight rem(datum.rank);
      bool fits = true;
      for (int i = 0; i < datum.rank; ++i) {
        rem.nu[i] = w.nu[i] - wr.nu[i];
        if (rem.nu[i] < 0) fits = false;
      }
      if (!fits) continue;
      // Split the remaining weight between u and v in all ways.
      std::vector<Weight> splits = weights_up_to(datum.rank, rem.total());
      splits.push_back(Weight(datum.rank));
      for (const Weight& wu : splits) {
        Weight wv(datum.rank);
        bool ok = true;
        for (int i = 0; i < datum.rank; ++i) {
          wv.nu[i] = rem.nu[i] - wu.nu[i];
          if (wv.nu[i] < 0) ok = false;
        }
        if (!ok) continue;
        for (const Monomial& u : monomials_of_weight(wu)) {
          for (const Monomial& v : monomials_of_weight(wv)) {
            FreeElem urv = free_mul(free_mul(mono_elem(u), rel.elem), mono_elem(v));
            std::vector<RatFunc> row(block.basis.size());
            for (const auto& [m, c] : urv) row[index.at(m)] = c;
            // absorb
            for (std::size_t k = 0; k < echelon.size(); ++k) {
              const RatFunc& lead = row[pivots[k]];
              if (!lead.is_zero()) {
                RatFunc fdiv = lead / echelon[k][pivots[k]];
                for (std::size_t jj = 0; jj < row.size(); ++jj) row[jj] -= fdiv * echelon[k][jj];
              }
            }
            for (std::size_t jj = 0; jj < row.size(); ++jj) {
              if (!row[jj].is_zero()) {
                pivots.push_back(static_cast<long>(jj));
                echelon.push_back(row);
                ++dim;
                break;
              }
            }
          }
        }
      }
    }
    rep.slices.push_back({w, static_cast<int>(block.basis.size()), dim, block.corank(),
                          dim == block.corank()});
  }
  return rep;
}

bool VerificationReport::ok() const {
  for (const auto& k : kernels)
    if (!k.in_kernel) return false;
  for (const auto& s : slices)
    if (!s.match) return false;
  return true;
}

}  // namespace superquant
