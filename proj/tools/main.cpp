#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "fastminors/problem.hpp"

using namespace fastminors;
using nlohmann::ordered_json;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kInconclusive = 2, kInputError = 3, kBudgetError = 4, kInternalError = 5 };

struct Globals {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string format = "text";
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  ordered_json config = ordered_json::object();
  ordered_json result;
  std::optional<MinorStats> stats;
  std::optional<int> dimension;
  std::vector<std::string> generators;
  std::vector<std::string> notes;  // text mode only
  double seconds = 0;
};

DetEngine engine_from(const std::string& s) {
  if (s == "bareiss") return DetEngine::Bareiss;
  if (s == "cofactor") return DetEngine::Cofactor;
  if (s == "recursive") return DetEngine::Recursive;
  throw InvalidInput("unknown determinant engine '" + s + "'");
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["result"] = r.result;
    j["considered"] = r.stats ? ordered_json(r.stats->considered) : ordered_json(nullptr);
    j["computed"] = r.stats ? ordered_json(r.stats->computed) : ordered_json(nullptr);
    j["dimension"] = r.dimension ? ordered_json(*r.dimension) : ordered_json(nullptr);
    j["generators"] = r.generators;
    j["config"] = r.config;
    j["wall_time_seconds"] = r.seconds;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "command: " << r.command << "\nseed: " << r.seed << "\nresult: "
            << (r.result.is_string() ? r.result.get<std::string>() : r.result.dump()) << '\n';
  if (r.stats) std::cout << "considered: " << r.stats->considered << "\ncomputed: " << r.stats->computed << '\n';
  if (r.dimension) std::cout << "dimension: " << *r.dimension << '\n';
  for (const auto& n : r.notes) std::cout << n << '\n';
  if (!r.generators.empty()) {
    std::cout << "generators:\n";
    for (const auto& g : r.generators) std::cout << "  " << g << '\n';
  }
  std::cout << std::fixed << std::setprecision(3) << "time: " << r.seconds << " s\n";
}

const PolyMatrix& need_matrix(const ProblemFile& p) {
  if (!p.matrix) throw InvalidInput("this command needs a 'matrix:' block");
  return *p.matrix;
}

const Ideal& need_ideal(const ProblemFile& p) {
  if (!p.ideal) throw InvalidInput("this command needs an 'ideal:' block");
  return *p.ideal;
}

ordered_json choice_json(const SubmatrixChoice& c) { return ordered_json{{"rows", c.rows}, {"cols", c.cols}}; }

// Dense homogeneous forms of the given degree with random integer coefficients.
PolyMatrix random_forms(const RingPtr& ring, std::size_t rows, std::size_t cols, unsigned degree, Rng& rng) {
  const std::size_t n = ring->num_vars();
  std::vector<Monomial> mons;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      mons.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  const Field& F = ring->field();
  PolyMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Term> terms;
      for (const auto& mono : mons) terms.push_back({F.random_nonzero(rng), mono});
      m(i, j) = Polynomial::from_terms(ring, std::move(terms));
    }
  return m;
}

template <class F>
double seconds_of(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heuristic minors, rank bounds and regularity checks over polynomial rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (drawn from entropy and echoed when omitted)");
  app.add_option("--jobs", g.jobs, "Worker threads for the recursive minors engine")->check(CLI::Range(1u, 256u));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  std::size_t size = 1, count = 1, rank = 1, min_dimension = 0;
  long rank_at_least = 0;
  int codim_n = 1;
  std::string det = "bareiss", strategy;
  std::optional<double> max_minors;
  std::optional<std::size_t> min_minors;
  std::optional<std::uint32_t> modulus;
  bool verbose = false;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Problem file")->required()->check(CLI::ExistingFile); };
  auto with_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", strategy, "Built-in strategy name or a table like {LexSmallest: 25, Points: 50}");
  };

  auto* minors = app.add_subcommand("minors", "All minors of a size via one determinant engine");
  with_file(minors);
  minors->add_option("--size", size)->required();
  minors->add_option("--det", det, "Determinant engine")->check(CLI::IsMember({"bareiss", "cofactor", "recursive"}));

  auto* choose = app.add_subcommand("choose-minors", "Sample minors by strategy");
  with_file(choose);
  choose->add_option("--size", size)->required();
  choose->add_option("--count", count)->required();
  with_strategy(choose);
  choose->add_option("--det", det, "Determinant engine")->check(CLI::IsMember({"bareiss", "cofactor", "recursive"}));

  auto* sub_rank = app.add_subcommand("submatrix-of-rank", "Search for a square submatrix of full rank");
  with_file(sub_rank);
  sub_rank->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  with_strategy(sub_rank);
  sub_rank->add_option("--max-minors", max_minors, "Fixed budget of minors to consider");

  auto* rank_cmd = app.add_subcommand("rank-at-least", "Certify a lower bound on the rank");
  with_file(rank_cmd);
  rank_cmd->add_option("--rank", rank_at_least)->required();
  with_strategy(rank_cmd);
  rank_cmd->add_option("--max-minors", max_minors, "Fixed budget of minors to consider");

  auto* regular = app.add_subcommand("regular-in-codim", "Try to verify that R/I is regular in codimension n");
  with_file(regular);
  regular->add_option("--n", codim_n, "Codimension")->required();
  with_strategy(regular);
  regular->add_option("--max-minors", max_minors, "Fixed budget of minors to consider");
  regular->add_option("--min-minors", min_minors, "Minors considered before the first check");
  regular->add_option("--det", det, "Determinant engine")->check(CLI::IsMember({"bareiss", "cofactor", "recursive"}));
  regular->add_option("--modulus", modulus, "Reduce a rational problem modulo this prime");
  regular->add_flag("--verbose", verbose, "Log checkpoints to standard error");

  auto* projdim = app.add_subcommand("proj-dim", "Upper bound for the projective dimension of a complex's cokernel");
  with_file(projdim);
  projdim->add_option("--min-dimension", min_dimension);
  with_strategy(projdim);
  projdim->add_option("--max-minors", max_minors, "Fixed budget of minors to consider");

  auto* gbdim = app.add_subcommand("gb-dim", "Groebner basis and Krull dimension of R/I");
  with_file(gbdim);

  std::size_t b_rows = 6, b_cols = 7, b_vars = 2, b_reps = 1;
  std::uint32_t b_char = 0;
  std::vector<unsigned> b_degrees{1, 2, 4, 8};
  bool b_csv = false;
  auto* bench = app.add_subcommand("benchmark", "Time the determinant engines on random matrices");
  bench->add_option("--rows", b_rows);
  bench->add_option("--cols", b_cols);
  bench->add_option("--size", size, "Minor size")->default_val(5);
  bench->add_option("--vars", b_vars)->check(CLI::PositiveNumber);
  bench->add_option("--degrees", b_degrees)->delimiter(',');
  bench->add_option("--reps", b_reps)->check(CLI::PositiveNumber);
  bench->add_option("--char", b_char, "0 for QQ, otherwise a prime");
  bench->add_flag("--csv", b_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Report rep;
  rep.seed = g.seed ? *g.seed : std::random_device{}() * 0x100000001ULL ^ std::random_device{}();
  Rng rng(rep.seed);
  rep.config["jobs"] = g.jobs;

  try {
    MinorLoopConfig cfg;
    cfg.jobs = g.jobs;
    cfg.det = engine_from(det);
    if (!strategy.empty()) cfg.strategy = parse_strategy(strategy);
    if (max_minors) cfg.max_minors = MinorLoopConfig::constant(*max_minors);
    if (min_minors) cfg.min_minors = [v = *min_minors](std::size_t) { return v; };
    if (!strategy.empty()) rep.config["strategy"] = cfg.strategy->to_string();
    if (max_minors) rep.config["max_minors"] = *max_minors;

    CLI::App* cmd = app.get_subcommands().front();
    rep.command = cmd->get_name();
    int code = kTrue;

    if (cmd == bench) {
      if (b_degrees.empty()) throw InvalidInput("degree list must not be empty");
      if (size == 0 || size > std::min(b_rows, b_cols)) throw InvalidInput("minor size must fit the shape");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < b_vars; ++i) names.push_back("x" + std::to_string(i + 1));
      RingPtr ring = make_ring(Field::from_characteristic(b_char), names);
      rep.config["shape"] = {b_rows, b_cols};
      rep.config["size"] = size;
      rep.config["vars"] = b_vars;
      rep.config["reps"] = b_reps;
      rep.config["char"] = b_char;
      ordered_json rows = ordered_json::array();
      if (g.format == "text") {
        std::cout << (b_csv ? "Degree,Bareiss,Cofactor,Recursive(1),Recursive(4)\n"
                            : "Degree    Bareiss   Cofactor  Recursive(1)  Recursive(4)\n");
      }
      const auto t0 = std::chrono::steady_clock::now();
      for (unsigned d : b_degrees) {
        double tb = 0, tc = 0, t1 = 0, t4 = 0;
        for (std::size_t r = 0; r < b_reps; ++r) {
          PolyMatrix m = random_forms(ring, b_rows, b_cols, d, rng);
          std::vector<Polynomial> ref;
          tb += seconds_of([&] { ref = all_minors(size, m, DetEngine::Bareiss); });
          tc += seconds_of([&] { all_minors(size, m, DetEngine::Cofactor); });
          t1 += seconds_of([&] { recursive_minors(size, m, {.jobs = 1}); });
          std::vector<Polynomial> par;
          t4 += seconds_of([&] { par = recursive_minors(size, m, {.jobs = 4}); });
          if (par != ref) throw std::logic_error("engines disagree");
        }
        const double k = static_cast<double>(b_reps);
        tb /= k, tc /= k, t1 /= k, t4 /= k;
        rows.push_back({{"degree", d}, {"bareiss", tb}, {"cofactor", tc}, {"recursive_1", t1}, {"recursive_4", t4}});
        if (g.format == "text") {
          if (b_csv) {
            std::cout << d << ',' << tb << ',' << tc << ',' << t1 << ',' << t4 << '\n';
          } else {
            std::cout << std::left << std::setw(10) << d << std::setw(10) << std::setprecision(4) << tb << std::setw(10)
                      << tc << std::setw(14) << t1 << t4 << '\n';
          }
        }
      }
      rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (g.format == "json") {
        rep.result = rows;
        emit(rep, g.format);
      }
      return kTrue;
    }

    const ProblemFile problem = load_problem(file);
    const auto t0 = std::chrono::steady_clock::now();

    if (cmd == minors) {
      const PolyMatrix& m = need_matrix(problem);
      rep.config["size"] = size;
      rep.config["det"] = det;
      std::vector<Polynomial> all = cfg.det == DetEngine::Recursive
                                        ? recursive_minors(size, m, {.jobs = g.jobs})
                                        : all_minors(size, m, cfg.det, g.jobs);
      std::erase_if(all, [](const Polynomial& p) { return p.is_zero(); });
      rep.result = all.size();
      rep.generators = strings(all);
    } else if (cmd == choose) {
      const PolyMatrix& m = need_matrix(problem);
      rep.config["size"] = size;
      rep.config["count"] = count;
      const StrategyTable st = cfg.strategy.value_or(builtin_strategy("StrategyDefault"));
      GoodMinors gm = choose_good_minors(count, size, m, st, problem.ideal, rng, cfg.det);
      rep.result = gm.minors.generators().size();
      rep.stats = gm.stats;
      rep.generators = strings(gm.minors.generators());
    } else if (cmd == sub_rank) {
      rep.config["rank"] = rank;
      auto c = get_submatrix_of_rank(rank, need_matrix(problem), cfg, rng);
      rep.result = c ? choice_json(*c) : ordered_json(nullptr);
      code = c ? kTrue : kInconclusive;
    } else if (cmd == rank_cmd) {
      rep.config["rank"] = rank_at_least;
      const bool ok = is_rank_at_least(rank_at_least, need_matrix(problem), cfg, rng);
      rep.result = ok;
      code = ok ? kTrue : kFalse;
    } else if (cmd == regular) {
      rep.config["n"] = codim_n;
      rep.config["det"] = det;
      if (min_minors) rep.config["min_minors"] = *min_minors;
      if (modulus) rep.config["modulus"] = *modulus;
      cfg.modulus = modulus;
      cfg.verbose = verbose;
      cfg.log = &std::cerr;
      RegularityReport r = regular_in_codimension(codim_n, RingPresentation(need_ideal(problem)), cfg, rng);
      rep.result = std::string(verdict_name(r.verdict));
      rep.stats = r.stats;
      rep.dimension = r.locus_dimension;
      rep.generators = strings(r.minors);
      rep.notes.push_back("ring dimension: " + std::to_string(r.ring_dimension));
      rep.notes.push_back("possible minors: " + r.possible_minors);
      code = r.verdict == Verdict::True ? kTrue : r.verdict == Verdict::False ? kFalse : kInconclusive;
    } else if (cmd == projdim) {
      if (!problem.complex) throw InvalidInput("proj-dim needs a 'complex:' block");
      rep.config["min_dimension"] = min_dimension;
      ProjDimReport r = proj_dim_upper_bound(*problem.complex, min_dimension, cfg, rng);
      rep.result = r.bound;
      rep.stats = r.stats;
    } else if (cmd == gbdim) {
      const Ideal& ideal = need_ideal(problem);
      const int d = dim_quotient(ideal);
      rep.result = d;
      rep.dimension = d;
      rep.generators = strings(ideal.groebner_basis());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, g.format);
    return code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
