#include <algorithm>
#include <numeric>

#include "fastminors/linalg.hpp"

namespace fastminors {

namespace {

Polynomial cofactor_expand(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2) {
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  }
  std::size_t best = 0, best_zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t zeros = 0;
    for (auto c : cols) zeros += m(rows[i], c).is_zero();
    if (zeros == n) return Polynomial(m.ring());
    if (i == 0 || zeros > best_zeros) {
      best = i;
      best_zeros = zeros;
    }
  }
  std::vector<std::size_t> sub_rows = rows;
  sub_rows.erase(sub_rows.begin() + static_cast<long>(best));
  const std::size_t row = rows[best];
  Polynomial acc(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& a = m(row, cols[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<long>(j));
    Polynomial minor = cofactor_expand(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    if ((best + j) % 2 == 0) {
      acc += a * minor;
    } else {
      acc -= a * minor;
    }
  }
  return acc;
}

}  // namespace

Polynomial det_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  bool negate = false;
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(m.ring());
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = k == 0 ? std::move(num) : exact_divide(num, prev);
      }
    }
    prev = a[k][k];
  }
  Polynomial det = std::move(a[n - 1][n - 1]);
  return negate ? -det : det;
}

Polynomial det_cofactor(const PolyMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_expand(m, rows, cols);
}

Polynomial determinant(const PolyMatrix& m, DetEngine engine, unsigned jobs) {
  switch (engine) {
    case DetEngine::Bareiss:
      return det_bareiss(m);
    case DetEngine::Cofactor:
      return det_cofactor(m);
    case DetEngine::Recursive:
      if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
      if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
      return recursive_minors(m.rows(), m, {.jobs = jobs})[0];
  }
  throw InvalidInput("unknown determinant engine");
}

}  // namespace fastminors
