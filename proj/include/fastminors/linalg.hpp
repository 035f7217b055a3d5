#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "fastminors/matrix.hpp"

namespace fastminors {

enum class DetEngine { Bareiss, Cofactor, Recursive };

/// Fraction-free Gaussian elimination with exact division.
Polynomial det_bareiss(const PolyMatrix& m);
/// Laplace expansion, always along the row with the most zero entries.
Polynomial det_cofactor(const PolyMatrix& m);
Polynomial determinant(const PolyMatrix& m, DetEngine engine, unsigned jobs = 1);

/// C(nrows, k) * C(ncols, k).
mpz_class count_possible_minors(std::size_t nrows, std::size_t ncols, std::size_t k);

struct RecursiveMinorsOptions {
  unsigned jobs = 1;
  /// Refuse inputs whose memo table would hold more entries than this.
  double max_table_entries = 1e7;
};

/// Number of entries the memo table of recursive_minors needs for (k, nrows, ncols).
double recursive_minors_table_size(std::size_t k, std::size_t nrows, std::size_t ncols);

/// All k x k minors, ordered lexicographically by (row set, column set).
/// Each level j is built from level j-1 by expansion along the first column,
/// and only the subsets some k-minor actually needs are ever computed.
std::vector<Polynomial> recursive_minors(std::size_t k, const PolyMatrix& m, const RecursiveMinorsOptions& opts = {});

/// All k x k minors via one determinant per submatrix, same order as recursive_minors.
std::vector<Polynomial> all_minors(std::size_t k, const PolyMatrix& m, DetEngine engine, unsigned jobs = 1);

struct PivotRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;

  /// The first `size` pivots as a choice; its block is invertible.
  SubmatrixChoice leading_block(std::size_t size) const;
};

PivotRank numeric_rank(const ScalarMatrix& m);
/// Entries must be constants.
PivotRank numeric_rank(const PolyMatrix& m);

/// Rank over the fraction field.
std::size_t symbolic_rank(const PolyMatrix& m);

/// numVars rows, one column per generator: entry (j, i) = d gens[i] / d x_j.
PolyMatrix jacobian(const std::vector<Polynomial>& gens);

}  // namespace fastminors
