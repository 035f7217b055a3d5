#include "fastminors/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace fastminors {

namespace {

void check_exponent(std::uint64_t e) {
  if (e > kMaxExponent) throw InvalidInput("exponent overflow: " + std::to_string(e) + " exceeds 65535");
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps.size(), 0) {
  std::size_t i = 0;
  for (auto e : exps) set(i++, e);
}

Monomial::Monomial(const std::vector<std::uint32_t>& exps) : exps_(exps.size(), 0) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power) {
  if (index >= num_vars) throw InvalidInput("variable index out of range");
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  check_exponent(e);
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  const std::size_t n = std::min<std::size_t>(exps_.size(), 64);
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw InvalidInput("monomial length mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lowered(std::size_t i) const {
  Monomial r(*this);
  --r.exps_[i];
  --r.degree_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = degree_;
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)), identity_(true) {
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || seen[perm_[i]]) throw InvalidInput("order permutation is not a bijection");
    seen[perm_[i]] = true;
    if (perm_[i] != i) identity_ = false;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::grevlex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::GRevLex, std::move(p));
}

MonomialOrder MonomialOrder::random(OrderKind kind, std::size_t num_vars, Rng& rng) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return MonomialOrder(kind, std::move(p));
}

MonomialOrder random_order(OrderKind kind, std::size_t num_vars, Rng& rng) {
  return MonomialOrder::random(kind, num_vars, rng);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != perm_.size() || b.size() != perm_.size()) {
    throw InvalidInput("monomial length does not match the order");
  }
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = perm_.size();
  if (kind_ == OrderKind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v = identity_ ? i : perm_[i];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t v = identity_ ? i : perm_[i];
    // larger exponent in a less significant variable makes the monomial smaller
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace fastminors
