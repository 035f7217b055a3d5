#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fastminors/field.hpp"
#include "fastminors/monomial.hpp"

namespace fastminors {

/// Coefficient field plus variable names.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names);

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  /// Index of a variable name, or -1.
  long index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Scalar coeff;
  Monomial mono;
};

enum class Extremum { Smallest, Largest };

/// Sparse polynomial.  Terms are kept sorted descending under the canonical
/// order with no zero coefficients and no repeated monomials, so equality is
/// structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Scalar& c, Monomial m);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms must already be canonical (sorted, distinct, nonzero).
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term (zero if absent).
  Scalar constant_term() const;
  /// Largest total degree; -1 for zero.
  long total_degree() const noexcept;

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  /// The smallest or largest term under `ord`.  Throws on zero.
  Polynomial extremal_term(const MonomialOrder& ord, Extremum direction) const;
  /// Terms sorted descending under `ord`.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;
  /// Same polynomial with coefficients scaled so the canonical leading one is 1.
  Polynomial monic() const;
  /// Image under the coefficient map into `target` (same variables).
  Polynomial change_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& q) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient p / d; throws InvalidInput if d does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// Orders polynomials by their term lists under `ord` (leading terms first,
/// coefficients ignored).  Neither argument may be zero.
std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := coefficient | variable ('^' uint)? | '(' expr ')' ('^' uint)?;
/// coefficient := int ('/' uint)?.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace fastminors
