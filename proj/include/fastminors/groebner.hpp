#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fastminors/polynomial.hpp"

namespace fastminors {

struct GroebnerOptions {
  /// S-pairs processed before giving up with BudgetExceeded.
  std::size_t max_pairs = 200000;
};

/// Remainder of multivariate division of p by `basis` under `ord`; no term of
/// the result is divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Reduced, monic Groebner basis, sorted by increasing leading monomial.
/// Pairs are processed smallest-lcm first and pruned with the Gebauer-Moeller
/// form of Buchberger's product and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   const GroebnerOptions& opts = {});

/// Leading monomial of a nonzero polynomial under `ord`.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord);

/// Ideal with a write-once cache of Groebner bases per order.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  /// Zero polynomials are dropped from `gens`.
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_->num_vars(); }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Computed once per order, then shared.  Throws BudgetExceeded.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord, const GroebnerOptions& opts = {}) const;
  /// Default order: GRevLex with the identity permutation.
  const std::vector<Polynomial>& groebner_basis() const;

  Ideal plus(const std::vector<Polynomial>& more) const;
  /// p in I, decided by reduction against the default basis.
  bool contains(const Polynomial& p) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool is_unit_ideal(const Ideal& ideal);

/// Krull dimension of R/I; -1 for the unit ideal.
int dim_quotient(const Ideal& ideal);
int dim_quotient(const Ideal& ideal, const MonomialOrder& ord);
/// numVars - dim(R/I); the unit ideal gets numVars + 1.
int codim_quotient(const Ideal& ideal);

/// Dimension of R/J for J generated by monomials with these leading monomials.
int monomial_dim(const std::vector<Monomial>& monomials, std::size_t num_vars);
/// Codimension of a monomial ideal: minimum number of variables meeting every
/// support.  Contains 1 -> num_vars + 1.
int monomial_codim(const std::vector<Monomial>& monomials, std::size_t num_vars);
/// Minimum hitting set of variable supports (bit masks), by branch and bound.
int min_vertex_cover(std::vector<std::uint64_t> supports);

enum class CodimCheck { Proven, Inconclusive };

/// The bound behind is_codim_at_least; the reductions are skipped once the
/// generator heads alone reach `stop_at`.
int codim_lower_bound(const Ideal& ideal, const MonomialOrder& ord, std::size_t max_reductions = 50,
                      int stop_at = 1 << 30);

/// Sound and cheap: the leading monomials of the generators, plus those found
/// within `max_reductions` S-pair reductions, generate a subideal of in(I), so
/// its codimension bounds codim(I) from below.  Never disproves.
CodimCheck is_codim_at_least(int c, const Ideal& ideal, const MonomialOrder& ord, std::size_t max_reductions = 50);

/// R/I with n ambient variables; caches dim(R/I).
class RingPresentation {
 public:
  explicit RingPresentation(Ideal ideal) : ideal_(std::move(ideal)) {}

  const Ideal& ideal() const noexcept { return ideal_; }
  const RingPtr& ring() const noexcept { return ideal_.ring(); }
  std::size_t num_vars() const noexcept { return ideal_.num_vars(); }
  int dimension() const;

 private:
  Ideal ideal_;
  mutable std::optional<int> dim_;
};

/// Low-level incremental Buchberger state, exposed for capped runs.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, MonomialOrder ord);
  ~GroebnerEngine();
  GroebnerEngine(const GroebnerEngine&) = delete;
  GroebnerEngine& operator=(const GroebnerEngine&) = delete;

  /// Reduces each input against the current set and inserts the remainder.
  void add(const std::vector<Polynomial>& gens);
  /// Inserts a known Groebner basis without queueing pairs among its elements.
  void add_basis(const std::vector<Polynomial>& basis);
  /// Processes at most `max_pairs` pairs; true once the queue is empty.
  bool run(std::size_t max_pairs);
  std::size_t pairs_processed() const noexcept;
  bool contains_unit() const noexcept;

  std::vector<Monomial> leading_monomials() const;
  /// Requires run() to have returned true.
  std::vector<Polynomial> reduced_basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fastminors
