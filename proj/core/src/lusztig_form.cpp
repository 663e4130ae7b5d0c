#include "superquant/lusztig_form.hpp"

#include <algorithm>

#include "superquant/errors.hpp"

namespace superquant {

LusztigForm::LusztigForm(const FreeAlgebra& algebra, int degree_cap)
    : alg_(algebra), cap_(degree_cap) {}

RatFunc LusztigForm::generator_value(int i) const {
  const CartanDatum& d = alg_.datum();
  if (d.is_odd(i + 1)) return RatFunc(Rat(1));
  long e = d.qi_exp(i + 1);
  Laurent qi_minus_inv =
      Laurent::monomial(Rat(1), e, alg_.unit_L()) - Laurent::monomial(Rat(1), -e, alg_.unit_L());
  return RatFunc(qi_minus_inv).inverse();
}

RatFunc LusztigForm::form(const Monomial& x, const Monomial& y) const {
  if (x.degree() != y.degree()) return RatFunc();
  if (!(x.weight(alg_.rank()) == y.weight(alg_.rank()))) return RatFunc();
  if (x.degree() == 0) return RatFunc(Rat(1));
  if (x.degree() == 1) {
    return x.letters[0] == y.letters[0] ? generator_value(x.letters[0]) : RatFunc();
  }

  std::scoped_lock lock(memo_mu_);
  auto key = std::make_pair(x, y);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // C(x, theta_j z) = sum over r(x) = sum x' (x) x'' with x' = theta_j of
  // (-1)^{p(x'') p(theta_j)} C(theta_j, theta_j) C(x'', z).
  int j = y.letters.front();
  Monomial z(std::vector<std::uint8_t>(y.letters.begin() + 1, y.letters.end()));
  int pj = alg_.datum().is_odd(j + 1) ? 1 : 0;
  RatFunc gen = generator_value(j);
  RatFunc total;
  for (const auto& [k, c] : alg_.r_of(x)) {
    const auto& [left, right] = k;
    if (left.degree() != 1 || left.letters[0] != j) continue;
    RatFunc term = c * gen * form(right, z);
    if (pj && alg_.parity(right)) term = -term;
    total += term;
  }
  memo_.emplace(key, total);
  return total;
}

RatFunc LusztigForm::form(const FreeElem& x, const FreeElem& y) const {
  RatFunc total;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) total += cx * cy * form(mx, my);
  return total;
}

RatFunc LusztigForm::form_tensor(const TensorElem& x, const TensorElem& y) const {
  RatFunc total;
  for (const auto& [kx, cx] : x) {
    int p2 = alg_.parity(kx.second);
    for (const auto& [ky, cy] : y) {
      RatFunc term = cx * cy * form(kx.first, ky.first) * form(kx.second, ky.second);
      if (p2 && alg_.parity(ky.first)) term = -term;
      total += term;
    }
  }
  return total;
}

GramBlock LusztigForm::gram(const Weight& weight) const {
  if (weight.total() > cap_) throw CapExceeded("gram: weight above degree cap");
  GramBlock block;
  block.weight = weight;
  block.basis = monomials_of_weight(weight);
  const std::size_t n = block.basis.size();
  block.matrix.assign(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block.matrix[i][j] = form(block.basis[i], block.basis[j]);
  block.rank = matrix_rank(block.matrix);
  return block;
}

bool LusztigForm::kernel_member(const FreeElem& x) const {
  if (is_zero(x)) return true;
  Weight w = weight_of(x, alg_.rank());
  for (const Monomial& b : monomials_of_weight(w)) {
    RatFunc v;
    for (const auto& [m, c] : x) v += c * form(b, m);
    if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<PairingEntry> LusztigForm::pairing_table(const Monomial& x, const FreeElem& rel) const {
  Weight wx = x.weight(alg_.rank());
  Weight wr = weight_of(rel, alg_.rank());
  if (!(wx == wr)) throw WeightMismatch();
  std::vector<PairingEntry> out;
  for (const auto& [m, c] : rel) out.push_back({m, c, form(x, m)});
  return out;
}

namespace {

// Incremental row reduction over RatFunc; returns true if the row extended
// the span (and absorbs it into `rows`).
bool absorb_row(std::vector<std::vector<RatFunc>>& rows, std::vector<long>& pivots,
                std::vector<RatFunc> row) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const RatFunc& lead = row[pivots[k]];
    if (!lead.is_zero()) {
      RatFunc f = lead / rows[k][pivots[k]];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * rows[k][j];
    }
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) {
      pivots.push_back(static_cast<long>(j));
      rows.push_back(std::move(row));
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Monomial> LusztigForm::quotient_basis(const Weight& weight) const {
  GramBlock block = gram(weight);
  std::vector<Monomial> chosen;
  std::vector<std::vector<RatFunc>> rows;
  std::vector<long> pivots;
  for (std::size_t i = 0; i < block.basis.size(); ++i)
    if (absorb_row(rows, pivots, block.matrix[i])) chosen.push_back(block.basis[i]);
  return chosen;
}

int matrix_rank(std::vector<std::vector<RatFunc>> m) {
  if (m.empty()) return 0;
  const std::size_t nrows = m.size(), ncols = m[0].size();
  // Clear denominators row by row; row scaling keeps the rank.
  std::vector<std::vector<Laurent>> a(nrows, std::vector<Laurent>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    Laurent l = Laurent::one();
    for (std::size_t j = 0; j < ncols; ++j)
      if (!m[i][j].is_zero()) l = laurent_lcm(l, m[i][j].den());
    for (std::size_t j = 0; j < ncols; ++j)
      a[i][j] = m[i][j].num() * div_exact(l, m[i][j].den());
  }

  Laurent prev = Laurent::one();
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    // Sparsest available pivot in this column.
    std::size_t pivot = nrows;
    for (std::size_t r = row; r < nrows; ++r) {
      if (a[r][col].is_zero()) continue;
      if (pivot == nrows || a[r][col].term_count() < a[pivot][col].term_count()) pivot = r;
    }
    if (pivot == nrows) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t r = row + 1; r < nrows; ++r) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        a[r][j] = div_exact(a[r][j] * a[row][col] - a[r][col] * a[row][j], prev);
      a[r][col] = Laurent::zero();
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace superquant
