#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "fastminors/error.hpp"

namespace fastminors {

/// An exact field element: a residue in [0, p) for prime fields, a reduced
/// fraction for the rationals.  The owning Field interprets it.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::uint32_t residue) : rep_(residue) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  bool is_residue() const noexcept { return std::holds_alternative<std::uint32_t>(rep_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_residue() != b.is_residue()) return false;
    if (a.is_residue()) return a.residue() == b.residue();
    return a.rational() == b.rational();
  }

 private:
  std::variant<std::uint32_t, mpq_class> rep_{std::uint32_t{0}};
};

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: Q, or F_p with p prime and p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint64_t p);
  /// 0 selects Q, anything else must be a prime below 2^31.
  static Field from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Throws InvalidInput when den is zero in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  /// Maps a rational number into this field (identity over Q).
  Scalar from_rational(const mpq_class& q) const { return from_fraction(q.get_num(), q.get_den()); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  /// Uniform over the field for F_p; small nonzero-biased integers over Q.
  Scalar random(Rng& rng) const;
  Scalar random_nonzero(Rng& rng) const;

  std::string to_string(const Scalar& a) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace fastminors
