#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fastminors/fastcheck.hpp"

namespace fmtest {

using namespace fastminors;

inline int sgn(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

inline RingPtr qq(std::vector<std::string> names) { return make_ring(Field::rationals(), std::move(names)); }
inline RingPtr fp(std::uint32_t p, std::vector<std::string> names) { return make_ring(Field::prime(p), std::move(names)); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline PolyMatrix mat(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  return PolyMatrix::parse(r, rows);
}

// Random polynomial with up to `terms` terms of total degree <= deg; small integer coefficients.
inline Polynomial random_poly(const RingPtr& r, Rng& rng, unsigned deg, unsigned terms) {
  const Field& F = r->field();
  std::vector<Term> out;
  std::uniform_int_distribution<unsigned> e(0, deg);
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> exps(r->num_vars(), 0);
    unsigned left = e(rng);
    for (auto& x : exps) {
      std::uniform_int_distribution<unsigned> pick(0, left);
      x = pick(rng);
      left -= x;
    }
    std::shuffle(exps.begin(), exps.end(), rng);
    std::uniform_int_distribution<int> c(-9, 9);
    out.push_back({F.from_int(c(rng)), Monomial(exps)});
  }
  return Polynomial::from_terms(r, std::move(out));
}

inline PolyMatrix random_matrix(const RingPtr& r, Rng& rng, std::size_t rows, std::size_t cols, unsigned deg,
                                unsigned terms, double zero_prob = 0.0) {
  PolyMatrix m(r, rows, cols);
  std::bernoulli_distribution zero(zero_prob);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m(i, j) = random_poly(r, rng, deg, terms);
  return m;
}

// Leibniz formula: sum over all permutations.
inline Polynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Largest k with a nonzero k x k minor, by Leibniz on every submatrix.
inline std::size_t brute_rank(const PolyMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k))
        if (!leibniz_det(submatrix(m, {rs, cs})).is_zero()) return k;
  return 0;
}

// Every S-polynomial and every generator reduces to zero.
inline bool is_groebner_of(const std::vector<Polynomial>& basis, const std::vector<Polynomial>& gens,
                           const MonomialOrder& ord) {
  for (const auto& g : gens)
    if (!normal_form(g, basis, ord).is_zero()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Term a = basis[i].sorted_terms(ord).front();
      const Term b = basis[j].sorted_terms(ord).front();
      const Monomial l = a.mono.lcm(b.mono);
      const Field& F = basis[i].field();
      Polynomial s = basis[i].mul_term(F.inv(a.coeff), l.quotient(a.mono)) -
                     basis[j].mul_term(F.inv(b.coeff), l.quotient(b.mono));
      if (!normal_form(s, basis, ord).is_zero()) return false;
    }
  }
  return true;
}

// Ideals equal: each generating set reduces to zero modulo a Groebner basis of the other.
inline bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  const auto& ring = a.empty() ? b.front().ring() : a.front().ring();
  const MonomialOrder ord = MonomialOrder::grevlex(ring->num_vars());
  const auto ga = buchberger(a, ord);
  const auto gb = buchberger(b, ord);
  for (const auto& p : a)
    if (!normal_form(p, gb, ord).is_zero()) return false;
  for (const auto& p : b)
    if (!normal_form(p, ga, ord).is_zero()) return false;
  return true;
}

// Minimum hitting set by trying every variable subset in increasing size.
inline int brute_cover(const std::vector<Monomial>& mons, std::size_t n) {
  for (const auto& m : mons)
    if (m.is_one()) return static_cast<int>(n) + 1;
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& s : subsets(n, k)) {
      std::uint64_t mask = 0;
      for (auto v : s) mask |= std::uint64_t{1} << v;
      bool ok = std::all_of(mons.begin(), mons.end(), [&](const Monomial& m) { return (m.support_mask() & mask) != 0; });
      if (ok) return static_cast<int>(k);
    }
  }
  return static_cast<int>(n);
}

inline const char* kRationalCurveIdeal[] = {
    "x5*x6-x4*x7",
    "x1*x6-x2*x7",
    "x5^2-x1*x7",
    "x4*x5-x2*x7",
    "x4^2-x2*x6",
    "x1*x4-x2*x5",
    "x2*x3^3*x5+3*x2*x3^2*x7+8*x2^2*x5+3*x3*x4*x7-8*x4*x7+x6*x7",
    "x1*x3^3*x5+3*x1*x3^2*x7+8*x1*x2*x5+3*x3*x5*x7-8*x5*x7+x7^2",
    "x2*x3^3*x4+3*x2*x3^2*x6+8*x2^2*x4+3*x3*x4*x6-8*x4*x6+x6^2",
    "x2^2*x3^3+3*x2*x3^2*x4+8*x2^3+3*x2*x3*x6-8*x2*x6+x4*x6",
    "x1*x2*x3^3+3*x2*x3^2*x5+8*x1*x2^2+3*x2*x3*x7-8*x2*x7+x4*x7",
    "x1^2*x3^3+3*x1*x3^2*x5+8*x1^2*x2+3*x1*x3*x7-8*x1*x7+x5*x7",
};

inline Ideal rational_curve_ideal() {
  RingPtr r = fp(101, {"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
  std::vector<Polynomial> gens;
  for (const char* s : kRationalCurveIdeal) gens.push_back(parse_polynomial(s, r));
  return Ideal(r, std::move(gens));
}

}  // namespace fmtest
