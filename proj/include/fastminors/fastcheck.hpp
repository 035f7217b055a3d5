#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fastminors/groebner.hpp"
#include "fastminors/selection.hpp"

namespace fastminors {

/// 10 m + 8 log_{1.3}(t): the default number of submatrices regular_in_codimension considers.
double default_max_minors(double minors_needed, double possible_minors);
/// 2 m + 3: submatrices considered before the first dimension check.
std::size_t default_min_minors(std::size_t minors_needed);
/// 5 d + 2 log_{1.3}(t), with d the number of ring variables.
double projdim_default_max_minors(double num_vars, double possible_minors);

/// Counts of considered submatrices at which the loop checks the dimension.
/// The first check fires at min_minors; after a check at count c, with k the
/// least integer such that base^k > c, the next fires at the least count
/// strictly above base^k.
class CheckpointSchedule {
 public:
  CheckpointSchedule(std::size_t min_minors, double base);

  std::size_t next() const noexcept { return next_; }
  bool due(std::size_t considered) const noexcept { return considered >= next_; }
  /// Records a check at `considered` and moves to the following trigger.
  void advance(std::size_t considered);

  /// The first `count` triggers.
  static std::vector<std::size_t> triggers(std::size_t min_minors, double base, std::size_t count);

 private:
  double base_;
  std::size_t next_;
};

using MaxMinorsFn = std::function<double(double, double)>;

struct MinorLoopConfig {
  /// (minors needed, possible minors) -> budget; unset selects the
  /// algorithm's default.  For proj_dim_upper_bound the first argument is the
  /// number of ring variables.
  MaxMinorsFn max_minors;
  std::function<std::size_t(std::size_t)> min_minors = default_min_minors;
  double codim_check_base = 1.3;
  /// Unset selects the algorithm's default strategy.
  std::optional<StrategyTable> strategy;
  DetEngine det = DetEngine::Bareiss;
  unsigned jobs = 1;
  /// Reduce all coefficients modulo this prime first.
  std::optional<std::uint32_t> modulus;
  bool verbose = false;
  std::ostream* log = nullptr;
  GroebnerOptions groebner;
  /// Random evaluations tried before a symbolic rank certificate.
  std::size_t certify_points = 3;

  static MaxMinorsFn constant(double budget) {
    return [budget](double, double) { return budget; };
  }
};

/// Searches for an r x r submatrix of rank r; nothing when the budget runs out.
/// Candidates are certified by evaluation at random points (full rank at a
/// specialization proves full symbolic rank), then by a determinant.
std::optional<SubmatrixChoice> get_submatrix_of_rank(std::size_t r, const PolyMatrix& m, const MinorLoopConfig& cfg,
                                                     Rng& rng);

bool is_rank_at_least(long n, const PolyMatrix& m, const MinorLoopConfig& cfg, Rng& rng);

enum class Verdict { True, False, Inconclusive };

std::string_view verdict_name(Verdict v);

struct RegularityReport {
  Verdict verdict = Verdict::Inconclusive;
  MinorStats stats;
  int ring_dimension = 0;
  /// Upper bound on the dimension of the partial singular locus at the last
  /// checkpoint (exact when it came from a full Groebner computation).
  std::optional<int> locus_dimension;
  std::string possible_minors;
  double max_minors = 0;
  std::size_t minor_size = 0;
  /// Every nonzero minor added to the defining ideal.
  std::vector<Polynomial> minors;
  /// Considered count at each checkpoint, and the full dimension there if computed.
  std::vector<std::size_t> checkpoints;
  std::vector<std::optional<int>> checkpoint_dimensions;
  /// Ring actually used (differs from the input when a modulus was given).
  RingPtr ring;
};

/// Tries to certify that R/I is regular in codimension n, i.e. that I plus
/// some Jacobian minors of size numVars - dim(R/I) has dimension at most
/// dim(R/I) - n - 1.  Assumes R/I is equidimensional; that is not checked.
/// False only when every distinct minor was computed and the bound still fails.
RegularityReport regular_in_codimension(int n, const RingPresentation& presentation, const MinorLoopConfig& cfg,
                                        Rng& rng);

/// Maps a presentation's coefficients into F_p.  Throws InvalidInput if a
/// denominator vanishes modulo p.
RingPresentation reduce_modulo(const RingPresentation& presentation, std::uint32_t p);

/// Free complex F_0 <- F_1 <- ... <- F_q given by d_1..d_q; d_i is
/// rank F_{i-1} x rank F_i.
class ChainComplex {
 public:
  /// Throws InvalidInput unless shapes compose and consecutive products vanish.
  explicit ChainComplex(std::vector<PolyMatrix> maps);

  const std::vector<PolyMatrix>& maps() const noexcept { return maps_; }
  std::size_t length() const noexcept { return maps_.size(); }
  std::size_t rank(std::size_t i) const;
  const RingPtr& ring() const { return maps_.front().ring(); }

 private:
  std::vector<PolyMatrix> maps_;
};

struct ProjDimReport {
  std::size_t bound = 0;
  /// Minor size tried at each trimming step, last one possibly failing.
  std::vector<std::size_t> step_sizes;
  MinorStats stats;
};

/// Upper bound on the projective dimension of coker d_1: trailing maps are
/// dropped while a sample of their minors of the split size generates the
/// unit ideal, and never below `min_dimension`.
ProjDimReport proj_dim_upper_bound(const ChainComplex& complex, std::size_t min_dimension, const MinorLoopConfig& cfg,
                                   Rng& rng);

}  // namespace fastminors
