#include "fastminors/fastcheck.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "fastminors/error.hpp"

namespace fastminors {

namespace {

double log13(double t) { return std::log(t) / std::log(1.3); }

void check_possible(double t) {
  if (!(t >= 1)) throw InvalidInput("possible minors must be at least 1");
}

// Saturating conversion; huge counts only ever matter through log().
double to_double(const mpz_class& z) { return z.get_d(); }

bool equals_count(const mpz_class& t, std::size_t computed) { return cmp(t, computed) == 0; }

}  // namespace

double default_max_minors(double minors_needed, double possible_minors) {
  check_possible(possible_minors);
  return 10 * minors_needed + 8 * log13(possible_minors);
}

std::size_t default_min_minors(std::size_t minors_needed) { return 2 * minors_needed + 3; }

double projdim_default_max_minors(double num_vars, double possible_minors) {
  check_possible(possible_minors);
  return 5 * num_vars + 2 * log13(possible_minors);
}

CheckpointSchedule::CheckpointSchedule(std::size_t min_minors, double base)
    : base_(base), next_(std::max<std::size_t>(min_minors, 1)) {
  if (!(base > 1)) throw InvalidInput("checkpoint base must exceed 1");
}

void CheckpointSchedule::advance(std::size_t considered) {
  const double c = static_cast<double>(considered);
  int k = 0;
  while (std::pow(base_, k) <= c) ++k;
  next_ = static_cast<std::size_t>(std::floor(std::pow(base_, k))) + 1;
}

std::vector<std::size_t> CheckpointSchedule::triggers(std::size_t min_minors, double base, std::size_t count) {
  CheckpointSchedule s(min_minors, base);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(s.next());
    s.advance(s.next());
  }
  return out;
}

std::optional<SubmatrixChoice> get_submatrix_of_rank(std::size_t r, const PolyMatrix& m, const MinorLoopConfig& cfg,
                                                     Rng& rng) {
  if (r == 0) throw InvalidInput("rank must be at least 1");
  if (r > std::min(m.rows(), m.cols())) return std::nullopt;
  const double t = to_double(count_possible_minors(m.rows(), m.cols(), r));
  const double budget = cfg.max_minors ? cfg.max_minors(1, t) : default_max_minors(1, t);
  const StrategyTable strategy = cfg.strategy.value_or(builtin_strategy("StrategyDefaultNonRandom"));
  MinorSampler sampler(m, r, strategy, cfg.det, rng, cfg.jobs);
  const Field& F = m.ring()->field();
  std::set<SubmatrixChoice> tried;

  for (std::size_t considered = 0; static_cast<double>(considered) < budget; ++considered) {
    SubmatrixChoice choice = sampler.draw();
    if (!tried.insert(choice.sorted()).second) continue;
    const PolyMatrix sub = submatrix(m, choice);
    bool ok = false;
    std::vector<Scalar> point(m.ring()->num_vars(), F.zero());
    for (std::size_t i = 0; i < cfg.certify_points && !ok; ++i) {
      for (auto& c : point) c = F.random(rng);
      ok = numeric_rank(evaluate_matrix(sub, point)).rank == r;
    }
    if (!ok) ok = !det_bareiss(sub).is_zero();
    if (ok) return choice;
  }
  return std::nullopt;
}

bool is_rank_at_least(long n, const PolyMatrix& m, const MinorLoopConfig& cfg, Rng& rng) {
  if (n <= 0) return true;
  if (static_cast<std::size_t>(n) > std::min(m.rows(), m.cols())) return false;
  if (get_submatrix_of_rank(static_cast<std::size_t>(n), m, cfg, rng)) return true;
  return symbolic_rank(m) >= static_cast<std::size_t>(n);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "none";
  }
  return "?";
}

RingPresentation reduce_modulo(const RingPresentation& presentation, std::uint32_t p) {
  const RingPtr& src = presentation.ring();
  const Field& F = src->field();
  if (F.is_prime_field()) {
    if (F.characteristic() == p) return presentation;
    throw InvalidInput("cannot reduce " + F.name() + " modulo " + std::to_string(p));
  }
  RingPtr target = make_ring(Field::prime(p), src->names());
  std::vector<Polynomial> gens;
  for (const auto& g : presentation.ideal().generators()) gens.push_back(g.change_ring(target));
  return RingPresentation(Ideal(target, std::move(gens)));
}

RegularityReport regular_in_codimension(int n, const RingPresentation& input, const MinorLoopConfig& cfg, Rng& rng) {
  const RingPresentation presentation = cfg.modulus ? reduce_modulo(input, *cfg.modulus) : input;
  std::ostream& log = cfg.log ? *cfg.log : std::cerr;
  const auto say = [&](const std::string& line) {
    if (cfg.verbose) log << "regularInCodimension: " << line << '\n';
  };

  RegularityReport report;
  report.ring = presentation.ring();
  const Ideal& ideal = presentation.ideal();
  const std::size_t nvars = presentation.num_vars();
  const int d = presentation.dimension();
  report.ring_dimension = d;
  const int target = d - n - 1;

  const auto finish = [&](Verdict v, std::optional<int> dim) {
    report.verdict = v;
    report.locus_dimension = dim;
    say("final dimension = " + (dim ? std::to_string(*dim) : std::string("unknown")));
    return report;
  };

  if (d < 0 || target >= d) {
    report.possible_minors = "0";
    say("ring dimension = " + std::to_string(d) + ", possible minors = 0, max minors = 0");
    return finish(Verdict::True, d);
  }
  const std::size_t minor_size = nvars - static_cast<std::size_t>(d);
  report.minor_size = minor_size;
  if (minor_size == 0) {
    report.possible_minors = "1";
    report.minors.push_back(Polynomial::constant(presentation.ring(), 1));
    say("ring dimension = " + std::to_string(d) + ", possible minors = 1, max minors = 0");
    return finish(Verdict::True, -1);
  }

  const std::vector<Polynomial>& gens = ideal.generators();
  const mpz_class t = gens.empty() ? mpz_class(0) : count_possible_minors(nvars, gens.size(), minor_size);
  report.possible_minors = t.get_str();
  const double m = n + 1;
  const double tdouble = std::max(1.0, to_double(t));
  const double max_m = cfg.max_minors ? cfg.max_minors(m, tdouble) : default_max_minors(m, tdouble);
  const std::size_t min_m = cfg.min_minors ? cfg.min_minors(static_cast<std::size_t>(m)) : default_min_minors(m);
  report.max_minors = max_m;
  {
    std::ostringstream banner;
    banner << "ring dimension = " << d << ", possible minors = " << t.get_str() << ", max minors = " << std::fixed
           << std::setprecision(3) << max_m;
    say(banner.str());
  }
  if (t == 0) return finish(Verdict::False, d);

  const StrategyTable strategy = cfg.strategy.value_or(builtin_strategy("StrategyDefault"));
  const bool uses_points = strategy.weight(SelectionMethod::Points) > 0;
  MinorSampler sampler(jacobian(gens), minor_size, strategy, cfg.det, rng, cfg.jobs);
  if (uses_points) sampler.set_point_ideal(ideal);

  const MonomialOrder ord = MonomialOrder::grevlex(nvars);
  const std::vector<Polynomial>& base_basis = ideal.groebner_basis();
  GroebnerEngine engine(presentation.ring(), ord);
  engine.add_basis(base_basis);
  std::vector<Polynomial> pending;
  std::optional<int> full_dim = d;

  CheckpointSchedule schedule(min_m, cfg.codim_check_base);
  const int needed_codim = static_cast<int>(nvars) - target;

  // Returns true once the accumulated ideal is small enough.
  const auto checkpoint = [&]() {
    const MinorStats& st = sampler.stats();
    report.checkpoints.push_back(st.considered);
    say("checkpoint considered = " + std::to_string(st.considered) + " computed = " + std::to_string(st.computed));

    std::vector<Polynomial> fast_gens = base_basis;
    fast_gens.insert(fast_gens.end(), report.minors.begin(), report.minors.end());
    const int bound = codim_lower_bound(Ideal(presentation.ring(), std::move(fast_gens)), ord, 50, needed_codim);
    if (bound >= needed_codim) {
      const int dim = static_cast<int>(nvars) - bound;
      report.checkpoint_dimensions.push_back(std::nullopt);
      say("fast codim bound succeeded, full dimension = " + std::to_string(dim));
      full_dim = dim;
      return true;
    }
    std::optional<int> dim;
    try {
      engine.add(pending);
      pending.clear();
      if (engine.run(cfg.groebner.max_pairs)) {
        dim = engine.contains_unit() ? -1 : monomial_dim(engine.leading_monomials(), nvars);
      }
    } catch (const BudgetExceeded&) {
    }
    report.checkpoint_dimensions.push_back(dim);
    say(std::string("fast codim bound failed, full dimension = ") + (dim ? std::to_string(*dim) : "unknown"));
    if (dim) full_dim = dim;
    return dim && *dim <= target;
  };

  while (true) {
    if (equals_count(t, sampler.stats().computed)) {
      // Every distinct submatrix is in; settle it.
      if (report.checkpoints.empty() || report.checkpoints.back() != sampler.stats().considered) {
        if (checkpoint()) break;
      }
      report.stats = sampler.stats();
      if (report.checkpoint_dimensions.back()) return finish(Verdict::False, full_dim);
      return finish(Verdict::Inconclusive, full_dim);
    }
    if (static_cast<double>(sampler.stats().considered) >= max_m) {
      report.stats = sampler.stats();
      return finish(Verdict::Inconclusive, full_dim);
    }
    if (auto det = sampler.step()) {
      pending.push_back(*det);
      report.minors.push_back(std::move(*det));
      if (uses_points) sampler.set_point_ideal(ideal.plus(report.minors));
    }
    const std::size_t considered = sampler.stats().considered;
    if (schedule.due(considered)) {
      schedule.advance(considered);
      if (checkpoint()) break;
    }
  }
  report.stats = sampler.stats();
  return finish(Verdict::True, full_dim);
}

}  // namespace fastminors
