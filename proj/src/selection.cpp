#include "fastminors/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fastminors {

namespace {

bool is_lex(SelectionMethod m) {
  return m == SelectionMethod::LexSmallest || m == SelectionMethod::LexSmallestTerm || m == SelectionMethod::LexLargest;
}

bool is_greedy(SelectionMethod m) {
  return m != SelectionMethod::Random && m != SelectionMethod::RandomNonzero && m != SelectionMethod::Points;
}

bool mutates(SelectionMethod m) {
  return m == SelectionMethod::GRevLexSmallest || m == SelectionMethod::GRevLexSmallestTerm;
}

// Monomials of a polynomial, descending under some order.
using OrderedSupport = std::vector<Monomial>;

std::strong_ordering compare_supports(const OrderedSupport& a, const OrderedSupport& b, const MonomialOrder& ord) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ord.compare_unchecked(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

void check_size(std::size_t size, const PolyMatrix& m) {
  if (size > std::min(m.rows(), m.cols())) throw InvalidInput("submatrix size exceeds the matrix dimensions");
}

}  // namespace

SubmatrixChoice select_greedy(SelectionMethod method, std::size_t size, const PolyMatrix& m,
                              const MonomialOrder& ord, Rng& rng) {
  if (!is_greedy(method)) throw InvalidInput("not a greedy selection method");
  check_size(size, m);
  if (ord.num_vars() != m.ring()->num_vars()) throw InvalidInput("order does not match the ring");
  const bool smallest_term =
      method == SelectionMethod::LexSmallestTerm || method == SelectionMethod::GRevLexSmallestTerm;
  const bool largest = method == SelectionMethod::LexLargest || method == SelectionMethod::GRevLexLargest;

  std::vector<std::optional<OrderedSupport>> keys(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& e = m(i, j);
      if (e.is_zero()) continue;
      OrderedSupport s;
      if (smallest_term) {
        s.push_back(e.extremal_term(ord, Extremum::Smallest).terms()[0].mono);
      } else {
        for (auto& t : e.sorted_terms(ord)) s.push_back(std::move(t.mono));
      }
      keys[i * m.cols() + j] = std::move(s);
    }
  }

  std::vector<bool> row_alive(m.rows(), true), col_alive(m.cols(), true);
  SubmatrixChoice choice;
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  for (std::size_t step = 0; step < size; ++step) {
    ties.clear();
    const OrderedSupport* best = nullptr;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!row_alive[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!col_alive[j]) continue;
        const auto& key = keys[i * m.cols() + j];
        if (!key) continue;
        if (best == nullptr) {
          best = &*key;
          ties.assign(1, {i, j});
          continue;
        }
        auto c = compare_supports(*key, *best, ord);
        if (largest) c = 0 <=> c;
        if (c < 0) {
          best = &*key;
          ties.assign(1, {i, j});
        } else if (c == 0) {
          ties.emplace_back(i, j);
        }
      }
    }
    if (ties.empty()) throw SelectionFailed("no nonzero entry left after " + std::to_string(step) + " picks");
    const auto [r, c] = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
    choice.rows.push_back(r);
    choice.cols.push_back(c);
    row_alive[r] = false;
    col_alive[c] = false;
  }
  return choice;
}

SubmatrixChoice choose_submatrix_greedy(SelectionMethod method, std::size_t size, WorkingMatrix& w, Rng& rng) {
  if (!is_greedy(method)) throw InvalidInput("not a greedy selection method");
  const auto ord = random_order(is_lex(method) ? OrderKind::Lex : OrderKind::GRevLex, w.original.ring()->num_vars(), rng);
  if (!mutates(method)) return select_greedy(method, size, w.original, ord, rng);
  SubmatrixChoice choice = select_greedy(method, size, w.mutated, ord, rng);
  mutate_working(w, choice, rng);
  return choice;
}

void mutate_working(WorkingMatrix& w, const SubmatrixChoice& used, Rng& rng) {
  const RingPtr& ring = w.original.ring();
  const Field& F = ring->field();
  for (std::size_t k = 0; k < used.size(); ++k) {
    Polynomial& entry = w.mutated(used.rows[k], used.cols[k]);
    if (entry.is_zero()) continue;
    std::vector<Term> linear;
    linear.push_back({F.random_nonzero(rng), Monomial(ring->num_vars())});
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      linear.push_back({F.random_nonzero(rng), Monomial::variable(ring->num_vars(), v)});
    }
    entry = entry * Polynomial::from_terms(ring, std::move(linear));
  }
  if (++w.selections_since_reset >= w.reset_period) {
    w.mutated = w.original;
    w.selections_since_reset = 0;
  }
}

SubmatrixChoice choose_submatrix_random(SelectionMethod method, std::size_t size, const PolyMatrix& m, Rng& rng) {
  check_size(size, m);
  if (method == SelectionMethod::Random) {
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    rows.resize(size);
    cols.resize(size);
    return {rows, cols};
  }
  if (method != SelectionMethod::RandomNonzero) throw InvalidInput("not a random selection method");
  std::vector<bool> row_alive(m.rows(), true), col_alive(m.cols(), true);
  SubmatrixChoice choice;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;
  for (std::size_t step = 0; step < size; ++step) {
    nonzero.clear();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!row_alive[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (col_alive[j] && !m(i, j).is_zero()) nonzero.emplace_back(i, j);
      }
    }
    if (nonzero.empty()) throw SelectionFailed("no nonzero entry left after " + std::to_string(step) + " picks");
    const auto [r, c] = nonzero[std::uniform_int_distribution<std::size_t>(0, nonzero.size() - 1)(rng)];
    choice.rows.push_back(r);
    choice.cols.push_back(c);
    row_alive[r] = false;
    col_alive[c] = false;
  }
  return choice;
}

std::optional<std::vector<Scalar>> find_point(const Ideal& ideal, Rng& rng, const FindPointOptions& opts) {
  const Field& F = ideal.ring()->field();
  if (!F.is_prime_field()) throw UnsupportedField("point search needs a finite prime field");
  const std::size_t n = ideal.num_vars();
  const std::uint32_t p = F.characteristic();
  auto on_variety = [&](const std::vector<Scalar>& pt) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Polynomial& g) { return F.is_zero(g.evaluate(pt)); });
  };
  std::vector<Scalar> pt(n);
  const double total = std::pow(static_cast<double>(p), static_cast<double>(n));
  if (total <= opts.exhaustive_limit) {
    std::vector<std::uint32_t> order(static_cast<std::size_t>(total));
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t code : order) {
      for (std::size_t v = 0; v < n; ++v) {
        pt[v] = Scalar(code % p);
        code /= p;
      }
      if (on_variety(pt)) return pt;
    }
    return std::nullopt;
  }
  for (std::size_t attempt = 0; attempt < opts.attempts; ++attempt) {
    for (auto& c : pt) c = F.random(rng);
    if (on_variety(pt)) return pt;
  }
  return std::nullopt;
}

SubmatrixChoice choose_submatrix_at_point(std::size_t size, const PolyMatrix& m, std::span<const Scalar> point) {
  check_size(size, m);
  const PivotRank pr = numeric_rank(evaluate_matrix(m, point));
  if (pr.rank < size) {
    throw SelectionFailed("matrix has rank " + std::to_string(pr.rank) + " at the point, below " + std::to_string(size));
  }
  return pr.leading_block(size);
}

SubmatrixChoice choose_submatrix_points(std::size_t size, const PolyMatrix& m, const Ideal& ideal, Rng& rng,
                                        const FindPointOptions& opts) {
  if (!m.ring()->field().is_prime_field()) return choose_submatrix_random(SelectionMethod::Random, size, m, rng);
  auto point = find_point(ideal, rng, opts);
  if (!point) throw SelectionFailed("no point found on the variety");
  return choose_submatrix_at_point(size, m, *point);
}

MinorSampler::MinorSampler(PolyMatrix m, std::size_t size, StrategyTable strategy, DetEngine engine, Rng& rng,
                           unsigned jobs)
    : working_(std::move(m)), size_(size), strategy_(strategy), engine_(engine), rng_(rng), jobs_(jobs) {
  check_size(size_, working_.original);
  strategy_.validate();
}

SubmatrixChoice MinorSampler::draw_with(SelectionMethod method) {
  const PolyMatrix& m = working_.original;
  try {
    switch (method) {
      case SelectionMethod::Random:
        return choose_submatrix_random(method, size_, m, rng_);
      case SelectionMethod::RandomNonzero:
        return choose_submatrix_random(method, size_, m, rng_);
      case SelectionMethod::Points:
        if (!point_ideal_) point_ideal_ = Ideal::zero(m.ring());
        return choose_submatrix_points(size_, m, *point_ideal_, rng_);
      default:
        return choose_submatrix_greedy(method, size_, working_, rng_);
    }
  } catch (const SelectionFailed&) {
    if (method == SelectionMethod::Random) throw;
    if (method == SelectionMethod::RandomNonzero) return choose_submatrix_random(SelectionMethod::Random, size_, m, rng_);
    return draw_with(SelectionMethod::RandomNonzero);
  }
}

SubmatrixChoice MinorSampler::draw() {
  last_method_ = strategy_.draw(rng_);
  return draw_with(last_method_);
}

std::optional<Polynomial> MinorSampler::step() {
  SubmatrixChoice choice = draw();
  ++stats_.considered;
  if (!seen_.insert(choice.sorted()).second) return std::nullopt;
  ++stats_.computed;
  if (size_ == 0) return Polynomial::constant(working_.original.ring(), 1);
  Polynomial det = determinant(submatrix(working_.original, choice), engine_, jobs_);
  if (det.is_zero()) return std::nullopt;
  return det;
}

GoodMinors choose_good_minors(std::size_t count, std::size_t size, const PolyMatrix& m, const StrategyTable& strategy,
                              const std::optional<Ideal>& point_ideal, Rng& rng, DetEngine engine) {
  MinorSampler sampler(m, size, strategy, engine, rng);
  if (point_ideal) sampler.set_point_ideal(*point_ideal);
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < count; ++i) {
    if (auto det = sampler.step()) minors.push_back(std::move(*det));
  }
  return {Ideal(m.ring(), std::move(minors)), sampler.stats()};
}

}  // namespace fastminors
