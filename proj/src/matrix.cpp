#include "fastminors/matrix.hpp"

#include <algorithm>

namespace fastminors {

SubmatrixChoice SubmatrixChoice::sorted() const {
  SubmatrixChoice s = *this;
  std::sort(s.rows.begin(), s.rows.end());
  std::sort(s.cols.begin(), s.cols.end());
  return s;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t nrows, std::size_t ncols)
    : ring_(ring), nrows_(nrows), ncols_(ncols), entries_(nrows * ncols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t nrows, std::size_t ncols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), nrows_(nrows), ncols_(ncols), entries_(std::move(entries)) {
  if (entries_.size() != nrows_ * ncols_) throw InvalidInput("matrix entry count does not match its shape");
  for (const auto& e : entries_) {
    if (!same_ring(e.ring(), ring_)) throw InvalidInput("matrix entries belong to different rings");
  }
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows[0].size() : 0;
  std::vector<Polynomial> entries;
  entries.reserve(nrows * ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw InvalidInput("matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return PolyMatrix(std::move(ring), nrows, ncols, std::move(entries));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& r : rows) {
    std::vector<Polynomial> pr;
    for (const auto& s : r) pr.push_back(parse_polynomial(s, ring));
    polys.push_back(std::move(pr));
  }
  return from_rows(ring, polys);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (ncols_ != other.nrows_) throw InvalidInput("matrix shapes do not compose");
  PolyMatrix r(ring_, nrows_, other.ncols_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < other.ncols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < ncols_; ++k) {
        if ((*this)(i, k).is_zero() || other(k, j).is_zero()) continue;
        acc += (*this)(i, k) * other(k, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < nrows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.entries_ == b.entries_;
}

PolyMatrix submatrix(const PolyMatrix& m, const SubmatrixChoice& c) {
  auto check = [](const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
    std::vector<bool> seen(bound, false);
    for (auto i : idx) {
      if (i >= bound) throw InvalidInput(std::string(what) + " index out of range");
      if (seen[i]) throw InvalidInput(std::string("repeated ") + what + " index");
      seen[i] = true;
    }
  };
  check(c.rows, m.rows(), "row");
  check(c.cols, m.cols(), "column");
  PolyMatrix s(m.ring(), c.rows.size(), c.cols.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    for (std::size_t j = 0; j < c.cols.size(); ++j) s(i, j) = m(c.rows[i], c.cols[j]);
  }
  return s;
}

ScalarMatrix evaluate_matrix(const PolyMatrix& m, std::span<const Scalar> point) {
  ScalarMatrix out{m.ring()->field(), m.rows(), m.cols(), {}};
  out.entries.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) out.entries.push_back(e.evaluate(point));
  return out;
}

ScalarMatrix constant_matrix(const PolyMatrix& m) {
  ScalarMatrix out{m.ring()->field(), m.rows(), m.cols(), {}};
  out.entries.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) {
    if (!e.is_constant()) throw InvalidInput("matrix entry " + e.to_string() + " is not a constant");
    out.entries.push_back(e.constant_term());
  }
  return out;
}

}  // namespace fastminors
