#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fastminors/polynomial.hpp"

namespace fastminors {

/// Row and column indices of a square submatrix, in the order they were chosen.
struct SubmatrixChoice {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const noexcept { return rows.size(); }
  /// Sorted copy, usable as a deduplication key.
  SubmatrixChoice sorted() const;

  friend bool operator==(const SubmatrixChoice&, const SubmatrixChoice&) = default;
  friend auto operator<=>(const SubmatrixChoice&, const SubmatrixChoice&) = default;
};

/// Dense row-major matrix of polynomials over a single ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t nrows, std::size_t ncols);
  PolyMatrix(RingPtr ring, std::size_t nrows, std::size_t ncols, std::vector<Polynomial> entries);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// Parses nested lists of polynomial strings.
  static PolyMatrix parse(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return nrows_; }
  std::size_t cols() const noexcept { return ncols_; }
  bool is_square() const noexcept { return nrows_ == ncols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * ncols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * ncols_ + j]; }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t nrows_, ncols_;
  std::vector<Polynomial> entries_;
};

/// Matrix over the coefficient field.
struct ScalarMatrix {
  Field field;
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> entries;

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// Entry (i, j) of the result is M[c.rows[i], c.cols[j]].
PolyMatrix submatrix(const PolyMatrix& m, const SubmatrixChoice& c);

ScalarMatrix evaluate_matrix(const PolyMatrix& m, std::span<const Scalar> point);
/// Throws InvalidInput if some entry is not constant.
ScalarMatrix constant_matrix(const PolyMatrix& m);

}  // namespace fastminors
