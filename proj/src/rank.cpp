#include <algorithm>

#include "fastminors/linalg.hpp"

namespace fastminors {

SubmatrixChoice PivotRank::leading_block(std::size_t size) const {
  if (size > rank) throw InvalidInput("requested block exceeds the rank");
  return {{pivot_rows.begin(), pivot_rows.begin() + static_cast<long>(size)},
          {pivot_cols.begin(), pivot_cols.begin() + static_cast<long>(size)}};
}

PivotRank numeric_rank(const ScalarMatrix& input) {
  const Field& F = input.field;
  ScalarMatrix a = input;
  std::vector<bool> used(a.rows, false);
  PivotRank out;
  for (std::size_t c = 0; c < a.cols; ++c) {
    std::size_t p = a.rows;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (!used[r] && !F.is_zero(a(r, c))) {
        p = r;
        break;
      }
    }
    if (p == a.rows) continue;
    used[p] = true;
    out.pivot_rows.push_back(p);
    out.pivot_cols.push_back(c);
    const Scalar inv = F.inv(a(p, c));
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (used[r] || F.is_zero(a(r, c))) continue;
      const Scalar factor = F.mul(a(r, c), inv);
      for (std::size_t j = c; j < a.cols; ++j) a(r, j) = F.sub(a(r, j), F.mul(factor, a(p, j)));
    }
  }
  out.rank = out.pivot_rows.size();
  return out;
}

PivotRank numeric_rank(const PolyMatrix& m) { return numeric_rank(constant_matrix(m)); }

std::size_t symbolic_rank(const PolyMatrix& m) {
  const std::size_t n = m.rows(), w = m.cols();
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < w; ++j) a[i].push_back(m(i, j));
  }
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(n, w); ++k) {
    // pivot on the sparsest nonzero entry of the trailing block
    std::size_t pr = n, pc = w, best = 0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < w; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pr == n || a[i][j].num_terms() < best) {
          pr = i;
          pc = j;
          best = a[i][j].num_terms();
        }
      }
    }
    if (pr == n) break;
    std::swap(a[k], a[pr]);
    if (pc != k) {
      for (auto& row : a) std::swap(row[k], row[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        Polynomial num = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev);
      }
      a[i][k] = Polynomial(m.ring());
    }
    prev = a[k][k];
    ++rank;
  }
  return rank;
}

PolyMatrix jacobian(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw InvalidInput("jacobian of an empty generator list");
  const RingPtr& ring = gens[0].ring();
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw InvalidInput("generators belong to different rings");
  }
  PolyMatrix j(ring, ring->num_vars(), gens.size());
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    for (std::size_t i = 0; i < gens.size(); ++i) j(v, i) = gens[i].derivative(v);
  }
  return j;
}

}  // namespace fastminors
