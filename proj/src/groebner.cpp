#include "fastminors/groebner.hpp"

#include <algorithm>
#include <bit>

namespace fastminors {

namespace {

struct GPoly {
  std::vector<Term> terms;  // descending under the engine order
  std::uint64_t lead_mask = 0;

  const Monomial& lead() const { return terms.front().mono; }
};

GPoly make_gpoly(std::vector<Term> terms) {
  GPoly g{std::move(terms), 0};
  if (!g.terms.empty()) g.lead_mask = g.lead().support_mask();
  return g;
}

// f[skip_f..] - c*m*g[skip_g..], merged under `ord`.
std::vector<Term> sub_multiple(const Field& F, const MonomialOrder& ord, const std::vector<Term>& f,
                               std::size_t skip_f, const Scalar& c, const Monomial& m, const std::vector<Term>& g,
                               std::size_t skip_g) {
  std::vector<Term> out;
  out.reserve(f.size() - skip_f + g.size() - skip_g);
  std::size_t i = skip_f, j = skip_g;
  const Scalar neg_c = F.neg(c);
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() && j < g.size()) {
    if (!have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    auto cmp = ord.compare_unchecked(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({F.mul(neg_c, g[j].coeff), std::move(gm)});
      ++j;
      have_gm = false;
    } else {
      Scalar s = F.add(f[i].coeff, F.mul(neg_c, g[j].coeff));
      if (!F.is_zero(s)) out.push_back({std::move(s), f[i].mono});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) {
    if (have_gm) {
      out.push_back({F.mul(neg_c, g[j].coeff), std::move(gm)});
      have_gm = false;
    } else {
      out.push_back({F.mul(neg_c, g[j].coeff), g[j].mono * m});
    }
  }
  return out;
}

std::vector<Term> sorted_under(const Polynomial& p, const MonomialOrder& ord) { return p.sorted_terms(ord); }

void make_monic(const Field& F, std::vector<Term>& terms) {
  if (terms.empty() || F.is_one(terms.front().coeff)) return;
  const Scalar inv = F.inv(terms.front().coeff);
  for (auto& t : terms) t.coeff = F.mul(t.coeff, inv);
}

// Reduces f by the polynomials in `pool` selected by `usable`; with `full`
// every term is reduced, otherwise only the leading one.
template <class Usable>
std::vector<Term> reduce_terms(const Field& F, const MonomialOrder& ord, std::vector<Term> f,
                               const std::vector<GPoly>& pool, Usable&& usable, bool full) {
  std::vector<Term> done;
  std::size_t head = 0;
  while (head < f.size()) {
    const Monomial& m = f[head].mono;
    const std::uint64_t mask = m.support_mask();
    const GPoly* best = nullptr;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!usable(k)) continue;
      const GPoly& g = pool[k];
      if ((g.lead_mask & ~mask) != 0 || !g.lead().divides(m)) continue;
      if (best == nullptr || g.terms.size() < best->terms.size()) best = &g;
    }
    if (best == nullptr) {
      if (!full) break;
      done.push_back(std::move(f[head]));
      ++head;
      continue;
    }
    const Scalar c = F.div(f[head].coeff, best->terms.front().coeff);
    const Monomial q = m.quotient(best->lead());
    f = sub_multiple(F, ord, f, head + 1, c, q, best->terms, 1);
    head = 0;
  }
  if (done.empty()) {
    f.erase(f.begin(), f.begin() + static_cast<long>(head));
    return f;
  }
  for (std::size_t k = head; k < f.size(); ++k) done.push_back(std::move(f[k]));
  return done;
}

}  // namespace

struct GroebnerEngine::Impl {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  RingPtr ring;
  Field F;
  MonomialOrder ord;
  std::vector<GPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::size_t processed = 0;
  bool unit = false;

  Impl(RingPtr r, MonomialOrder o) : ring(std::move(r)), F(ring->field()), ord(std::move(o)) {}

  std::vector<Term> reduce(std::vector<Term> f, bool full) const {
    return reduce_terms(F, ord, std::move(f), polys, [this](std::size_t k) { return active[k]; }, full);
  }

  void insert(std::vector<Term> terms) {
    make_monic(F, terms);
    GPoly h = make_gpoly(std::move(terms));
    if (h.lead().is_one()) {
      unit = true;
      pairs.clear();
      std::fill(active.begin(), active.end(), false);
      polys.push_back(std::move(h));
      active.push_back(true);
      return;
    }
    const std::size_t hi = polys.size();
    const Monomial& hl = h.lead();

    // Gebauer-Moeller update
    std::vector<std::size_t> cand;
    std::vector<Monomial> cand_lcm;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (!active[g]) continue;
      cand.push_back(g);
      cand_lcm.push_back(hl.lcm(polys[g].lead()));
    }
    std::vector<std::size_t> kept;  // indices into cand
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = hl.coprime(polys[cand[a]].lead());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b) {
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
        for (std::size_t b : kept) {
          if (!keep) break;
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      if (hl.divides(p.lcm) && !(hl.lcm(polys[p.i].lead()) == p.lcm) && !(hl.lcm(polys[p.j].lead()) == p.lcm)) {
        continue;
      }
      next.push_back(std::move(p));
    }
    for (std::size_t a : kept) {
      if (hl.coprime(polys[cand[a]].lead())) continue;
      next.push_back({cand[a], hi, cand_lcm[a]});
    }
    pairs = std::move(next);
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g] && hl.divides(polys[g].lead())) active[g] = false;
    }
    polys.push_back(std::move(h));
    active.push_back(true);
  }

  std::vector<Term> s_polynomial(const Pair& p) const {
    const GPoly& a = polys[p.i];
    const GPoly& b = polys[p.j];
    std::vector<Term> fa;
    fa.reserve(a.terms.size());
    const Monomial ma = p.lcm.quotient(a.lead());
    for (std::size_t k = 1; k < a.terms.size(); ++k) fa.push_back({a.terms[k].coeff, a.terms[k].mono * ma});
    // both are monic, so the leading terms cancel exactly
    return sub_multiple(F, ord, fa, 0, F.one(), p.lcm.quotient(b.lead()), b.terms, 1);
  }
};

GroebnerEngine::GroebnerEngine(RingPtr ring, MonomialOrder ord)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(ord))) {
  if (impl_->ord.num_vars() != impl_->ring->num_vars()) throw InvalidInput("order does not match the ring");
}

GroebnerEngine::~GroebnerEngine() = default;

void GroebnerEngine::add(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (impl_->unit) return;
    if (!same_ring(g.ring(), impl_->ring)) throw InvalidInput("generator belongs to a different ring");
    if (g.is_zero()) continue;
    auto r = impl_->reduce(sorted_under(g, impl_->ord), true);
    if (!r.empty()) impl_->insert(std::move(r));
  }
}

void GroebnerEngine::add_basis(const std::vector<Polynomial>& basis) {
  if (!impl_->polys.empty()) {
    add(basis);
    return;
  }
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto terms = sorted_under(g, impl_->ord);
    make_monic(impl_->F, terms);
    if (terms.front().mono.is_one()) {
      impl_->unit = true;
    }
    impl_->polys.push_back(make_gpoly(std::move(terms)));
    impl_->active.push_back(true);
  }
  if (impl_->unit) {
    impl_->polys.clear();
    impl_->active.clear();
    std::vector<Term> one{{impl_->F.one(), Monomial(impl_->ring->num_vars())}};
    impl_->insert(std::move(one));
  }
}

bool GroebnerEngine::run(std::size_t max_pairs) {
  auto& s = *impl_;
  std::size_t budget = max_pairs;
  while (!s.pairs.empty() && !s.unit) {
    if (budget == 0) return false;
    --budget;
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.pairs.size(); ++k) {
      if (s.ord.compare_unchecked(s.pairs[k].lcm, s.pairs[best].lcm) < 0) best = k;
    }
    Impl::Pair p = std::move(s.pairs[best]);
    s.pairs[best] = std::move(s.pairs.back());
    s.pairs.pop_back();
    ++s.processed;
    auto r = s.reduce(s.s_polynomial(p), true);
    if (!r.empty()) s.insert(std::move(r));
  }
  return true;
}

std::size_t GroebnerEngine::pairs_processed() const noexcept { return impl_->processed; }

bool GroebnerEngine::contains_unit() const noexcept { return impl_->unit; }

std::vector<Monomial> GroebnerEngine::leading_monomials() const {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < impl_->polys.size(); ++k) {
    if (impl_->active[k]) out.push_back(impl_->polys[k].lead());
  }
  return out;
}

std::vector<Polynomial> GroebnerEngine::reduced_basis() const {
  const auto& s = *impl_;
  std::vector<Polynomial> out;
  if (s.unit) {
    out.push_back(Polynomial::constant(s.ring, 1));
    return out;
  }
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.polys.size(); ++k) {
    if (s.active[k]) idx.push_back(k);
  }
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return s.ord.less(s.polys[a].lead(), s.polys[b].lead()); });
  for (std::size_t k : idx) {
    const auto& terms = s.polys[k].terms;
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    tail = reduce_terms(s.F, s.ord, std::move(tail), s.polys, [&](std::size_t j) { return j != k && s.active[j]; }, true);
    tail.insert(tail.begin(), terms.front());
    out.push_back(Polynomial::from_terms(s.ring, std::move(tail)));
  }
  return out;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw InvalidInput("leading monomial of zero");
  const auto& terms = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (ord.compare_unchecked(terms[i].mono, terms[best].mono) > 0) best = i;
  }
  return terms[best].mono;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  std::vector<GPoly> pool;
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), p.ring())) throw InvalidInput("basis element belongs to a different ring");
    if (!b.is_zero()) pool.push_back(make_gpoly(sorted_under(b, ord)));
  }
  auto r = reduce_terms(p.field(), ord, sorted_under(p, ord), pool, [](std::size_t) { return true; }, true);
  return Polynomial::from_terms(p.ring(), std::move(r));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   const GroebnerOptions& opts) {
  if (gens.empty()) return {};
  GroebnerEngine engine(gens.front().ring(), ord);
  engine.add(gens);
  if (!engine.run(opts.max_pairs)) {
    throw BudgetExceeded("Groebner basis computation exceeded " + std::to_string(opts.max_pairs) + " S-pairs");
  }
  return engine.reduced_basis();
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw InvalidInput("ideal generator belongs to a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord, const GroebnerOptions& opts) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, basis] : cache_->bases) {
    if (o == ord) return *basis;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(gens_.empty() ? std::vector<Polynomial>{}
                                                                             : buchberger(gens_, ord, opts));
  cache_->bases.emplace_back(ord, basis);
  return *basis;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  return groebner_basis(MonomialOrder::grevlex(num_vars()));
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> all = gens_;
  all.insert(all.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(all));
}

bool Ideal::contains(const Polynomial& p) const {
  return normal_form(p, groebner_basis(), MonomialOrder::grevlex(num_vars())).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) return true;  // generators are nonzero
  }
  if (ideal.generators().empty()) return false;
  const auto& basis = ideal.groebner_basis();
  return std::any_of(basis.begin(), basis.end(), [](const Polynomial& p) { return p.is_constant(); });
}

namespace {

void check_var_limit(std::size_t num_vars) {
  if (num_vars > 64) throw InvalidInput("dimension computations support at most 64 variables");
}

void cover_search(const std::vector<std::uint64_t>& edges, std::uint64_t chosen, int count, int& best) {
  if (count >= best) return;
  // smallest edge not yet hit
  const std::uint64_t* branch = nullptr;
  for (const auto& e : edges) {
    if ((e & chosen) != 0) continue;
    if (branch == nullptr || std::popcount(e) < std::popcount(*branch)) branch = &e;
  }
  if (branch == nullptr) {
    best = count;
    return;
  }
  // disjoint unhit edges each need their own vertex
  int packing = 0;
  std::uint64_t used = chosen;
  for (const auto& e : edges) {
    if ((e & used) == 0) {
      ++packing;
      used |= e;
    }
  }
  if (count + packing >= best) return;
  std::uint64_t rest = *branch;
  std::uint64_t excluded = 0;
  while (rest != 0) {
    const std::uint64_t bit = rest & (~rest + 1);
    rest &= rest - 1;
    // later branches may assume earlier vertices of this edge are not chosen
    std::vector<std::uint64_t> reduced;
    reduced.reserve(edges.size());
    bool infeasible = false;
    for (const auto& e : edges) {
      if ((e & (chosen | bit)) != 0) continue;
      const std::uint64_t trimmed = e & ~excluded;
      if (trimmed == 0) {
        infeasible = true;
        break;
      }
      reduced.push_back(trimmed);
    }
    if (!infeasible) cover_search(reduced, chosen | bit, count + 1, best);
    excluded |= bit;
  }
}

std::vector<std::uint64_t> supports_of(const std::vector<Monomial>& monomials) {
  std::vector<std::uint64_t> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(m.support_mask());
  return out;
}

}  // namespace

int min_vertex_cover(std::vector<std::uint64_t> supports) {
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // drop supersets: covering the smaller support covers the larger one
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool redundant = false;
    for (auto m : minimal) {
      if ((m & s) == m) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(s);
  }
  std::uint64_t all = 0;
  for (auto s : minimal) all |= s;
  int best = std::popcount(all) + 1;
  cover_search(minimal, 0, 0, best);
  return best;
}

int monomial_codim(const std::vector<Monomial>& monomials, std::size_t num_vars) {
  check_var_limit(num_vars);
  for (const auto& m : monomials) {
    if (m.is_one()) return static_cast<int>(num_vars) + 1;
  }
  return min_vertex_cover(supports_of(monomials));
}

int monomial_dim(const std::vector<Monomial>& monomials, std::size_t num_vars) {
  return static_cast<int>(num_vars) - monomial_codim(monomials, num_vars);
}

int dim_quotient(const Ideal& ideal, const MonomialOrder& ord) {
  check_var_limit(ideal.num_vars());
  const auto& basis = ideal.groebner_basis(ord);
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_monomial(g, ord));
  return monomial_dim(leads, ideal.num_vars());
}

int dim_quotient(const Ideal& ideal) { return dim_quotient(ideal, MonomialOrder::grevlex(ideal.num_vars())); }

int codim_quotient(const Ideal& ideal) { return static_cast<int>(ideal.num_vars()) - dim_quotient(ideal); }

int codim_lower_bound(const Ideal& ideal, const MonomialOrder& ord, std::size_t max_reductions, int stop_at) {
  const std::size_t n = ideal.num_vars();
  std::vector<Monomial> heads;
  for (const auto& g : ideal.generators()) heads.push_back(leading_monomial(g, ord));
  int bound = monomial_codim(heads, n);
  if (bound >= stop_at || max_reductions == 0) return bound;
  try {
    GroebnerEngine engine(ideal.ring(), ord);
    engine.add(ideal.generators());
    engine.run(max_reductions);
    bound = std::max(bound, engine.contains_unit() ? static_cast<int>(n) + 1
                                                   : monomial_codim(engine.leading_monomials(), n));
  } catch (const Error&) {
    // keep the bound from the generators
  }
  return bound;
}

CodimCheck is_codim_at_least(int c, const Ideal& ideal, const MonomialOrder& ord, std::size_t max_reductions) {
  if (c <= 0) return CodimCheck::Proven;
  return codim_lower_bound(ideal, ord, max_reductions, c) >= c ? CodimCheck::Proven : CodimCheck::Inconclusive;
}

int RingPresentation::dimension() const {
  if (!dim_) dim_ = dim_quotient(ideal_);
  return *dim_;
}

}  // namespace fastminors
