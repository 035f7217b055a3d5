#include "fastminors/field.hpp"

#include <limits>

namespace fastminors {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw InvalidInput("characteristic must be below 2^31");
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return is_prime_field() ? Scalar(std::uint32_t{0}) : Scalar(mpq_class(0)); }

Scalar Field::one() const { return is_prime_field() ? Scalar(std::uint32_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(long long v) const {
  if (!is_prime_field()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (!is_prime_field()) return Scalar(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw InvalidInput("zero denominator");
  if (!is_prime_field()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  Scalar d = from_integer(den);
  if (is_zero(d)) {
    throw InvalidInput("denominator " + den.get_str() + " is not invertible modulo " + std::to_string(p_));
  }
  return div(from_integer(num), d);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    if (s >= p_) s -= p_;
    return Scalar(static_cast<std::uint32_t>(s));
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t x = a.residue(), y = b.residue();
    return Scalar(x >= y ? x - y : x + (p_ - y));
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    return Scalar(static_cast<std::uint32_t>((std::uint64_t{a.residue()} * b.residue()) % p_));
  }
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw InvalidInput("division by zero");
  if (!is_prime_field()) return Scalar(mpq_class(1 / a.rational()));
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a.residue();
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Scalar(static_cast<std::uint32_t>(t));
}

bool Field::is_zero(const Scalar& a) const {
  return is_prime_field() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  return is_prime_field() ? a.residue() == 1 : a.rational() == 1;
}

Scalar Field::random(Rng& rng) const {
  if (is_prime_field()) return Scalar(static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng)));
  return from_int(std::uniform_int_distribution<int>(-100, 100)(rng));
}

Scalar Field::random_nonzero(Rng& rng) const {
  if (is_prime_field()) return Scalar(static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(1, p_ - 1)(rng)));
  int v = std::uniform_int_distribution<int>(1, 100)(rng);
  return from_int(std::bernoulli_distribution(0.5)(rng) ? v : -v);
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime_field()) {
    // symmetric representative reads better: 100 in F_101 prints as -1
    std::uint32_t r = a.residue();
    if (r > p_ / 2) return "-" + std::to_string(p_ - r);
    return std::to_string(r);
  }
  return a.rational().get_str();
}

std::string Field::name() const { return is_prime_field() ? "ZZ/" + std::to_string(p_) : "QQ"; }

}  // namespace fastminors
