#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "fastminors/linalg.hpp"

namespace fastminors {

namespace {

using Index = std::uint32_t;

// Sorted row set and sorted column set of one minor.
struct MinorKey {
  std::vector<Index> rows;
  std::vector<Index> cols;
  friend bool operator==(const MinorKey&, const MinorKey&) = default;
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const noexcept {
    std::size_t h = k.rows.size();
    for (auto r : k.rows) h = h * 131 + r;
    for (auto c : k.cols) h = h * 137 + c + 0x9e37;
    return h;
  }
};

using MinorTable = std::unordered_map<MinorKey, Polynomial, MinorKeyHash>;

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Index>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Index>> out;
  if (k > n) return out;
  std::vector<Index> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Index>(i);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : workers) t.join();
}

Polynomial det2(const PolyMatrix& m, const MinorKey& key) {
  return m(key.rows[0], key.cols[0]) * m(key.rows[1], key.cols[1]) -
         m(key.rows[0], key.cols[1]) * m(key.rows[1], key.cols[0]);
}

// Expansion along the first column against the previous level's table.
Polynomial expand_first_column(const PolyMatrix& m, const MinorKey& key, const MinorTable& prev) {
  Polynomial acc(m.ring());
  const Index col = key.cols[0];
  MinorKey sub;
  sub.cols.assign(key.cols.begin() + 1, key.cols.end());
  for (std::size_t i = 0; i < key.rows.size(); ++i) {
    const Polynomial& a = m(key.rows[i], col);
    if (a.is_zero()) continue;
    sub.rows.clear();
    for (std::size_t r = 0; r < key.rows.size(); ++r) {
      if (r != i) sub.rows.push_back(key.rows[r]);
    }
    const Polynomial& minor = prev.at(sub);
    if (minor.is_zero()) continue;
    if (i % 2 == 0) {
      acc += a * minor;
    } else {
      acc -= a * minor;
    }
  }
  return acc;
}

}  // namespace

mpz_class count_possible_minors(std::size_t nrows, std::size_t ncols, std::size_t k) {
  if (k > std::min(nrows, ncols)) throw InvalidInput("minor size out of range");
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), nrows, k);
  mpz_bin_uiui(b.get_mpz_t(), ncols, k);
  return a * b;
}

double recursive_minors_table_size(std::size_t k, std::size_t nrows, std::size_t ncols) {
  double total = 0;
  for (std::size_t j = 2; j <= k; ++j) total += binomial(nrows, j) * binomial(ncols - (k - j), j);
  return total;
}

std::vector<Polynomial> recursive_minors(std::size_t k, const PolyMatrix& m, const RecursiveMinorsOptions& opts) {
  if (k < 1 || k > std::min(m.rows(), m.cols())) throw InvalidInput("minor size out of range");
  if (k == 1) return m.entries();
  const double predicted = recursive_minors_table_size(k, m.rows(), m.cols());
  if (predicted > opts.max_table_entries) {
    throw BudgetExceeded("recursive minors table would hold " + std::to_string(static_cast<long long>(predicted)) +
                         " entries, above the cap of " + std::to_string(static_cast<long long>(opts.max_table_entries)));
  }

  // Targets in output order, then the subsets each level needs, top down.
  std::vector<std::vector<MinorKey>> needed(k + 1);
  const auto row_sets = subsets(m.rows(), k);
  const auto col_sets = subsets(m.cols(), k);
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) needed[k].push_back({r, c});
  }
  for (std::size_t j = k; j > 2; --j) {
    std::unordered_set<MinorKey, MinorKeyHash> seen;
    for (const auto& key : needed[j]) {
      MinorKey sub;
      sub.cols.assign(key.cols.begin() + 1, key.cols.end());
      for (std::size_t i = 0; i < key.rows.size(); ++i) {
        sub.rows = key.rows;
        sub.rows.erase(sub.rows.begin() + static_cast<long>(i));
        if (seen.insert(sub).second) needed[j - 1].push_back(sub);
      }
    }
  }

  MinorTable prev;
  for (std::size_t j = 2; j <= k; ++j) {
    const auto& level = needed[j];
    std::vector<Polynomial> values(level.size(), Polynomial(m.ring()));
    // workers only read `prev` and write disjoint slots of `values`
    parallel_for(level.size(), opts.jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        values[i] = j == 2 ? det2(m, level[i]) : expand_first_column(m, level[i], prev);
      }
    });
    if (j == k) return values;
    MinorTable next;
    next.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) next.emplace(level[i], std::move(values[i]));
    prev = std::move(next);
  }
  return {};
}

std::vector<Polynomial> all_minors(std::size_t k, const PolyMatrix& m, DetEngine engine, unsigned jobs) {
  if (engine == DetEngine::Recursive) return recursive_minors(k, m, {.jobs = jobs});
  if (k < 1 || k > std::min(m.rows(), m.cols())) throw InvalidInput("minor size out of range");
  std::vector<Polynomial> out;
  const auto row_sets = subsets(m.rows(), k);
  const auto col_sets = subsets(m.cols(), k);
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) {
      SubmatrixChoice choice{{r.begin(), r.end()}, {c.begin(), c.end()}};
      out.push_back(determinant(submatrix(m, choice), engine));
    }
  }
  return out;
}

}  // namespace fastminors
