#include "fastminors/polynomial.hpp"

#include <algorithm>

namespace fastminors {

Ring::Ring(Field field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidInput("duplicate variable name '" + names_[i] + "'");
    }
  }
}

long Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<long>(i);
  }
  return -1;
}

RingPtr make_ring(Field field, std::vector<std::string> names) {
  return std::make_shared<const Ring>(field, std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {

bool canonical_greater(const Term& a, const Term& b) { return canonical_compare(a.mono, b.mono) > 0; }

// Merges two canonical term lists: a + sign*b.
std::vector<Term> merge_terms(const Field& F, const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = canonical_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({negate_b ? F.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Scalar s = negate_b ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (!F.is_zero(s)) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({negate_b ? F.neg(b[j].coeff) : b[j].coeff, b[j].mono});
  return out;
}

Scalar power(const Field& F, Scalar base, std::uint32_t e) {
  Scalar result = F.one();
  while (e > 0) {
    if (e & 1) result = F.mul(result, base);
    e >>= 1;
    if (e) base = F.mul(base, base);
  }
  return result;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({c, Monomial(p.ring_->num_vars())});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->num_vars();
  Scalar one = ring->field().one();
  return term(std::move(ring), one, Monomial::variable(n, index));
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, Monomial m) {
  if (m.size() != ring->num_vars()) throw InvalidInput("monomial length does not match the ring");
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({c, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& F = ring->field();
  for (const auto& t : terms) {
    if (t.mono.size() != ring->num_vars()) throw InvalidInput("monomial length does not match the ring");
  }
  std::sort(terms.begin(), terms.end(), canonical_greater);
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
      if (F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return field().zero();
}

long Polynomial::total_degree() const noexcept {
  // canonical order is graded, so the first term has the largest degree
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().mono.degree());
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (!same_ring(ring_, q.ring_)) throw InvalidInput("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_ring(q);
  return from_sorted_terms(ring_, merge_terms(field(), terms_, q.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  check_ring(q);
  return from_sorted_terms(ring_, merge_terms(field(), terms_, q.terms_, true));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().neg(t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_ring(q);
  if (is_zero() || q.is_zero()) return Polynomial(ring_);
  if (q.terms_.size() == 1) return mul_term(q.terms_[0].coeff, q.terms_[0].mono);
  if (terms_.size() == 1) return q.mul_term(terms_[0].coeff, terms_[0].mono);
  const Field& F = field();
  std::vector<Term> products;
  products.reserve(terms_.size() * q.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : q.terms_) products.push_back({F.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  const Field& F = field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  const Field& F = field();
  if (F.is_zero(c)) return Polynomial(ring_);
  // multiplication by a monomial preserves any monomial order
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->num_vars()) throw InvalidInput("derivative variable index out of range");
  const Field& F = field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Scalar c = F.mul(t.coeff, F.from_int(e));
    if (F.is_zero(c)) continue;
    out.push_back({std::move(c), t.mono.lowered(var)});
  }
  // lowering one exponent can reorder terms of equal degree
  return from_terms(ring_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->num_vars()) throw InvalidInput("evaluation point has wrong length");
  const Field& F = field();
  Scalar sum = F.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !F.is_zero(v); ++i) {
      if (t.mono[i] != 0) v = F.mul(v, power(F, point[i], t.mono[i]));
    }
    sum = F.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::extremal_term(const MonomialOrder& ord, Extremum direction) const {
  if (is_zero()) throw InvalidInput("extremal term of the zero polynomial");
  if (ord.num_vars() != ring_->num_vars()) throw InvalidInput("order does not match the ring");
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    auto c = ord.compare_unchecked(terms_[i].mono, terms_[best].mono);
    if ((direction == Extremum::Smallest && c < 0) || (direction == Extremum::Largest && c > 0)) best = i;
  }
  return term(ring_, terms_[best].coeff, terms_[best].mono);
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.compare_unchecked(a.mono, b.mono) > 0; });
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(terms_.front().coeff));
}

Polynomial Polynomial::change_ring(const RingPtr& target) const {
  if (target->num_vars() != ring_->num_vars()) throw InvalidInput("target ring has a different number of variables");
  const Field& src = field();
  const Field& dst = target->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = src.is_prime_field() ? dst.from_int(t.coeff.residue()) : dst.from_rational(t.coeff.rational());
    out.push_back({std::move(c), t.mono});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    std::string c = F.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (!same_ring(p.ring(), d.ring())) throw InvalidInput("polynomials belong to different rings");
  const Field& F = p.field();
  const Term& lead = d.terms().front();
  if (d.num_terms() == 1) {
    std::vector<Term> out;
    out.reserve(p.num_terms());
    Scalar inv = F.inv(lead.coeff);
    for (const auto& t : p.terms()) {
      if (!lead.mono.divides(t.mono)) throw InvalidInput("inexact polynomial division");
      out.push_back({F.mul(t.coeff, inv), t.mono.quotient(lead.mono)});
    }
    return Polynomial::from_sorted_terms(p.ring(), std::move(out));
  }
  Scalar inv = F.inv(lead.coeff);
  std::vector<Term> rest = p.terms();
  std::vector<Term> quotient;
  while (!rest.empty()) {
    const Term& top = rest.front();
    if (!lead.mono.divides(top.mono)) throw InvalidInput("inexact polynomial division");
    Term q{F.mul(top.coeff, inv), top.mono.quotient(lead.mono)};
    std::vector<Term> sub;
    sub.reserve(d.num_terms());
    for (const auto& t : d.terms()) sub.push_back({F.mul(t.coeff, q.coeff), t.mono * q.mono});
    rest = merge_terms(F, rest, sub, true);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_sorted_terms(p.ring(), std::move(quotient));
}

std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("cannot order the zero polynomial");
  const auto ta = a.sorted_terms(ord);
  const auto tb = b.sorted_terms(ord);
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ord.compare_unchecked(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

}  // namespace fastminors
