#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fastminors/groebner.hpp"
#include "fastminors/linalg.hpp"

namespace fastminors {

enum class SelectionMethod {
  LexSmallest,
  LexSmallestTerm,
  LexLargest,
  GRevLexSmallest,
  GRevLexSmallestTerm,
  GRevLexLargest,
  Random,
  RandomNonzero,
  Points,
};

inline constexpr std::size_t kNumMethods = 9;
inline constexpr std::array<SelectionMethod, kNumMethods> kAllMethods = {
    SelectionMethod::LexSmallest,     SelectionMethod::LexSmallestTerm,     SelectionMethod::LexLargest,
    SelectionMethod::GRevLexSmallest, SelectionMethod::GRevLexSmallestTerm, SelectionMethod::GRevLexLargest,
    SelectionMethod::Random,          SelectionMethod::RandomNonzero,       SelectionMethod::Points,
};

std::string_view method_name(SelectionMethod m);
std::optional<SelectionMethod> method_from_name(std::string_view name);

/// Relative weights of the selection methods; a method is drawn with
/// probability weight / total.
class StrategyTable {
 public:
  StrategyTable() = default;
  StrategyTable(std::initializer_list<std::pair<SelectionMethod, unsigned>> weights);

  unsigned weight(SelectionMethod m) const { return weights_[static_cast<std::size_t>(m)]; }
  void set_weight(SelectionMethod m, unsigned w) { weights_[static_cast<std::size_t>(m)] = w; }
  unsigned total() const;
  /// Throws InvalidInput when every weight is zero.
  void validate() const;
  SelectionMethod draw(Rng& rng) const;

  std::string to_string() const;
  friend bool operator==(const StrategyTable&, const StrategyTable&) = default;

 private:
  std::array<unsigned, kNumMethods> weights_{};
};

/// StrategyDefault, StrategyDefaultNonRandom, StrategyDefaultWithPoints,
/// StrategyLexSmallest, StrategyGRevLexSmallest, StrategyPoints,
/// StrategyRandom; a bare method name selects that method alone.
StrategyTable builtin_strategy(std::string_view name);
/// A built-in name, or a literal like "{LexSmallest: 25, Points: 50}".
StrategyTable parse_strategy(std::string_view text);

/// Matrix whose entries get perturbed by the GRevLex methods so that repeated
/// draws do not keep landing on the same submatrix.
struct WorkingMatrix {
  explicit WorkingMatrix(PolyMatrix m, std::size_t period = 5)
      : original(m), mutated(std::move(m)), reset_period(period) {}

  PolyMatrix original;
  PolyMatrix mutated;
  std::size_t selections_since_reset = 0;
  std::size_t reset_period;
};

/// Greedy pick under a fixed order: `size` times take the extremal surviving
/// nonzero entry of `m` and delete its row and column.  Ties are broken
/// uniformly.  Indices are recorded in selection order.
SubmatrixChoice select_greedy(SelectionMethod method, std::size_t size, const PolyMatrix& m,
                              const MonomialOrder& ord, Rng& rng);

/// Draws a fresh random order of the method's kind, selects greedily, and for
/// the GRevLex methods reads from and then mutates `w.mutated`.
SubmatrixChoice choose_submatrix_greedy(SelectionMethod method, std::size_t size, WorkingMatrix& w, Rng& rng);

SubmatrixChoice choose_submatrix_random(SelectionMethod method, std::size_t size, const PolyMatrix& m, Rng& rng);

struct FindPointOptions {
  std::size_t attempts = 2000;
  /// Fields with p^n up to this size are searched exhaustively.
  double exhaustive_limit = 1e6;
};

/// A point of V(gens) over F_p, or nothing.  Throws UnsupportedField over Q.
std::optional<std::vector<Scalar>> find_point(const Ideal& ideal, Rng& rng, const FindPointOptions& opts = {});

/// Pivot block of M evaluated at `point`; SelectionFailed when the evaluated
/// rank is below `size`.
SubmatrixChoice choose_submatrix_at_point(std::size_t size, const PolyMatrix& m, std::span<const Scalar> point);

/// find_point on `ideal`, then choose_submatrix_at_point.  Over Q this
/// degrades to Random.
SubmatrixChoice choose_submatrix_points(std::size_t size, const PolyMatrix& m, const Ideal& ideal, Rng& rng,
                                        const FindPointOptions& opts = {});

/// Multiplies the entries at the chosen positions of `w.mutated` by random
/// degree-one polynomials; restores the original every reset_period calls.
void mutate_working(WorkingMatrix& w, const SubmatrixChoice& used, Rng& rng);

struct MinorStats {
  std::size_t considered = 0;
  std::size_t computed = 0;
};

/// Draws submatrices one at a time by strategy, deduplicating by sorted
/// index sets.  Selection failures fall back greedy -> RandomNonzero -> Random.
class MinorSampler {
 public:
  MinorSampler(PolyMatrix m, std::size_t size, StrategyTable strategy, DetEngine engine, Rng& rng,
               unsigned jobs = 1);

  /// Ideal whose points the Points method searches; defaults to the zero ideal.
  void set_point_ideal(Ideal ideal) { point_ideal_ = std::move(ideal); }

  /// One selection without computing a determinant.
  SubmatrixChoice draw();
  /// One considered submatrix; returns the determinant if it was new and nonzero.
  std::optional<Polynomial> step();

  const MinorStats& stats() const noexcept { return stats_; }
  std::size_t size() const noexcept { return size_; }
  const PolyMatrix& matrix() const noexcept { return working_.original; }
  SelectionMethod last_method() const noexcept { return last_method_; }
  /// Sorted keys of every submatrix computed so far.
  const std::set<SubmatrixChoice>& seen() const noexcept { return seen_; }

 private:
  SubmatrixChoice draw_with(SelectionMethod method);

  WorkingMatrix working_;
  std::size_t size_;
  StrategyTable strategy_;
  DetEngine engine_;
  Rng& rng_;
  unsigned jobs_;
  std::optional<Ideal> point_ideal_;
  std::set<SubmatrixChoice> seen_;
  MinorStats stats_;
  SelectionMethod last_method_ = SelectionMethod::Random;
};

struct GoodMinors {
  Ideal minors;
  MinorStats stats;
};

/// `count` sampler steps; nonzero new determinants form the returned ideal.
GoodMinors choose_good_minors(std::size_t count, std::size_t size, const PolyMatrix& m, const StrategyTable& strategy,
                              const std::optional<Ideal>& point_ideal, Rng& rng,
                              DetEngine engine = DetEngine::Bareiss);

}  // namespace fastminors
