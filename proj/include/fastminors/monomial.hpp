#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fastminors/error.hpp"

namespace fastminors {

using Exponent = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps);
  explicit Monomial(const std::vector<std::uint32_t>& exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i set iff variable i (i < 64) occurs.
  std::uint64_t support_mask() const noexcept;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  /// Exponent of variable i decreased by one; caller guarantees it is positive.
  Monomial lowered(std::size_t i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void set(std::size_t i, std::uint32_t e);

  boost::container::small_vector<Exponent, 12> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { Lex, GRevLex };

/// Lex or GRevLex over a permutation of the variables; position 0 of the
/// permutation is the most significant variable.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);

  static MonomialOrder lex(std::size_t num_vars);
  static MonomialOrder grevlex(std::size_t num_vars);
  /// Uniformly random variable permutation.
  static MonomialOrder random(OrderKind kind, std::size_t num_vars, Rng& rng);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  std::size_t num_vars() const noexcept { return perm_.size(); }

  /// Throws InvalidInput on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// No length check; for inner loops after validation.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept;

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare_unchecked(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }

 private:
  OrderKind kind_;
  std::vector<std::size_t> perm_;
  bool identity_;
};

MonomialOrder random_order(OrderKind kind, std::size_t num_vars, Rng& rng);

/// The storage order for polynomials: GRevLex with the identity permutation.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace fastminors
