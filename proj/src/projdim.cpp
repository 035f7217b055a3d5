#include "fastminors/error.hpp"
#include "fastminors/fastcheck.hpp"

namespace fastminors {

ChainComplex::ChainComplex(std::vector<PolyMatrix> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw InvalidInput("a complex needs at least one map");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!same_ring(maps_[i].ring(), maps_[0].ring())) throw InvalidInput("maps of a complex must share a ring");
    if (i + 1 < maps_.size()) {
      if (maps_[i].cols() != maps_[i + 1].rows()) {
        throw InvalidInput("d" + std::to_string(i + 1) + " has " + std::to_string(maps_[i].cols()) + " columns but d" +
                           std::to_string(i + 2) + " has " + std::to_string(maps_[i + 1].rows()) + " rows");
      }
      if (!(maps_[i] * maps_[i + 1]).is_zero()) {
        throw InvalidInput("d" + std::to_string(i + 1) + " * d" + std::to_string(i + 2) + " is not zero");
      }
    }
  }
}

std::size_t ChainComplex::rank(std::size_t i) const {
  if (i > maps_.size()) throw InvalidInput("no module F_" + std::to_string(i));
  return i == 0 ? maps_[0].rows() : maps_[i - 1].cols();
}

ProjDimReport proj_dim_upper_bound(const ChainComplex& complex, std::size_t min_dimension, const MinorLoopConfig& cfg,
                                   Rng& rng) {
  ProjDimReport report;
  const std::size_t q = complex.length();
  report.bound = q;
  const StrategyTable strategy = cfg.strategy.value_or(builtin_strategy("StrategyDefault"));
  const double nvars = static_cast<double>(complex.ring()->num_vars());

  // Rank of the part of F_{i} that splits off into F_{i+1}.
  std::size_t split = 0;
  for (std::size_t i = q; i >= 1 && report.bound > min_dimension; --i) {
    const PolyMatrix& d = complex.maps()[i - 1];
    if (split > complex.rank(i)) break;
    const std::size_t size = complex.rank(i) - split;
    report.step_sizes.push_back(size);
    if (size > std::min(d.rows(), d.cols())) break;

    bool unit = size == 0;
    if (!unit) {
      const mpz_class t = count_possible_minors(d.rows(), d.cols(), size);
      const double tdouble = t.get_d();
      const double budget = cfg.max_minors ? cfg.max_minors(nvars, tdouble) : projdim_default_max_minors(nvars, tdouble);
      MinorSampler sampler(d, size, strategy, cfg.det, rng, cfg.jobs);
      std::vector<Polynomial> minors;
      while (static_cast<double>(sampler.stats().considered) < budget && cmp(t, sampler.stats().computed) > 0) {
        if (auto det = sampler.step()) {
          if (det->is_constant()) unit = true;
          minors.push_back(std::move(*det));
          if (unit) break;
        }
      }
      report.stats.considered += sampler.stats().considered;
      report.stats.computed += sampler.stats().computed;
      if (!unit && !minors.empty()) {
        try {
          unit = is_unit_ideal(Ideal(complex.ring(), std::move(minors)));
        } catch (const BudgetExceeded&) {
          unit = false;
        }
      }
    }
    if (!unit) break;
    report.bound = i - 1;
    split = size;
  }
  return report;
}

}  // namespace fastminors
