#include "ccodes/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "ccodes/error.hpp"

namespace ccodes {

namespace {

constexpr auto kNone = static_cast<std::size_t>(-1);

// Objective for the heuristic: (k, number of rows attaining the max zeros).
std::pair<std::size_t, std::size_t> matching_cost(const Adjacency& a, const std::vector<std::size_t>& col) {
  std::vector<bool> matched(a.cols(), false);
  for (auto j : col) matched[j] = true;
  std::size_t worst = 0;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::size_t zeros = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const bool one = matched[j] ? col[i] == j : a(i, j);
      zeros += !one;
    }
    if (zeros > worst) {
      worst = zeros;
      ties = 1;
    } else if (zeros == worst) {
      ++ties;
    }
  }
  return {worst + 1, ties};
}

}  // namespace

DminResult d_min_bound(const ConstraintGraph& g, std::size_t max_s) {
  const std::size_t s = g.messages();
  if (s > max_s)
    throw GuardExceeded("d_min needs 2^" + std::to_string(s) + " subsets; s exceeds the guard of " +
                        std::to_string(max_s) + " (raise --max-subset-s)");
  const std::size_t words = g.words();
  std::vector<std::vector<std::uint64_t>> stack(s + 1, std::vector<std::uint64_t>(words, 0));
  std::vector<std::size_t> current;
  DminResult best{std::numeric_limits<std::size_t>::max(), {}};

  std::function<void(std::size_t)> visit = [&](std::size_t start) {
    const std::size_t depth = current.size();
    for (std::size_t i = start; i < s; ++i) {
      const auto bits = g.row_bits(i);
      auto& next = stack[depth + 1];
      std::size_t reach = 0;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = stack[depth][w] | bits[w];
        reach += static_cast<std::size_t>(std::popcount(next[w]));
      }
      current.push_back(i);
      // reach >= |M'| is not guaranteed (Hall may fail), so work in signed space.
      const auto value = static_cast<long long>(reach) - static_cast<long long>(current.size()) + 1;
      if (value < static_cast<long long>(best.d_min) || best.witness.empty()) {
        best.d_min = static_cast<std::size_t>(std::max(value, 0LL));
        best.witness = current;
      }
      visit(i + 1);
      current.pop_back();
    }
  };
  visit(0);
  return best;
}

std::size_t k_of_matching(const ConstraintGraph& g, const Matching& m) {
  return row_zero_stats(matched_adjacency(g, m)).k();
}

KsysResult k_sys_search(const ConstraintGraph& g, SearchMode mode, std::size_t max_exact_s) {
  const Adjacency& a = g.adjacency();
  const std::size_t s = g.messages();
  const std::size_t n = g.length();
  auto start = try_find_matching(a);
  if (!start) throw Infeasible("no matching covers every message symbol, so no systematic code exists");

  if (mode == SearchMode::heuristic) {
    std::vector<std::size_t> col = start->column;
    std::vector<bool> used(n, false);
    for (auto j : col) used[j] = true;
    auto cost = matching_cost(a, col);
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!a(i, j) || used[j]) continue;
          const std::size_t old = col[i];
          col[i] = j;
          const auto c = matching_cost(a, col);
          if (c < cost) {
            cost = c;
            used[old] = false;
            used[j] = true;
            improved = true;
          } else {
            col[i] = old;
          }
        }
        for (std::size_t r = i + 1; r < s; ++r) {
          if (!a(i, col[r]) || !a(r, col[i])) continue;
          std::swap(col[i], col[r]);
          const auto c = matching_cost(a, col);
          if (c < cost) {
            cost = c;
            improved = true;
          } else {
            std::swap(col[i], col[r]);
          }
        }
      }
    }
    return {cost.first, Matching{std::move(col)}, false};
  }

  if (s > max_exact_s)
    throw GuardExceeded("exact k_sys search limited to s <= " + std::to_string(max_exact_s) + " (s = " +
                        std::to_string(s) + "); raise --max-exact-s");

  const std::size_t floor_k = n - d_min_bound(g, std::max<std::size_t>(s, kDefaultSubsetGuard)).d_min + 1;

  // zeros[r] counts structural zeros of row r plus matched columns (owned by
  // other rows) where row r had an edge. It only grows as rows are assigned,
  // so the running max is a lower bound on the final k - 1.
  std::vector<std::size_t> zeros(s);
  for (std::size_t i = 0; i < s; ++i) zeros[i] = n - a.row_ones(i);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> col(s, kNone);
  std::size_t best_k = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_col;

  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t row, std::size_t cur_max) -> bool {
    if (row == s) {
      best_k = cur_max + 1;
      best_col = col;
      return best_k <= floor_k;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(row, j) || used[j]) continue;
      std::size_t next_max = cur_max;
      for (std::size_t r = 0; r < s; ++r)
        if (r != row && a(r, j)) next_max = std::max(next_max, zeros[r] + 1);
      if (next_max + 1 >= best_k) continue;
      for (std::size_t r = 0; r < s; ++r)
        if (r != row && a(r, j)) ++zeros[r];
      used[j] = true;
      col[row] = j;
      const bool done = dfs(row + 1, next_max);
      used[j] = false;
      col[row] = kNone;
      for (std::size_t r = 0; r < s; ++r)
        if (r != row && a(r, j)) --zeros[r];
      if (done) return true;
    }
    return false;
  };
  dfs(0, *std::max_element(zeros.begin(), zeros.end()));
  return {best_k, Matching{std::move(best_col)}, true};
}

BoundsReport bounds_report(const ConstraintGraph& g, const BoundsOptions& opts) {
  BoundsReport rep;
  rep.s = g.messages();
  rep.n = g.length();
  auto dm = d_min_bound(g, opts.max_subset_s);
  rep.d_min = dm.d_min;
  rep.k_min = rep.n - rep.d_min + 1;
  rep.witness_subset = std::move(dm.witness);
  rep.fully_connected = g.fully_connected();
  rep.a = rep.fully_connected.size();
  rep.r_m = rep.n - rep.a;
  rep.thm2_feasible = rep.d_min > 0 && rep.k_min >= rep.r_m;

  if (try_find_matching(g.adjacency())) {
    const auto mode = rep.s <= opts.max_exact_s ? SearchMode::exact : SearchMode::heuristic;
    auto ks = k_sys_search(g, mode, opts.max_exact_s);
    rep.has_matching = true;
    rep.k_sys = ks.k_sys;
    rep.d_sys = rep.n - ks.k_sys + 1;
    rep.witness_matching = std::move(ks.witness);
    rep.search_exact = ks.exact;
  }
  return rep;
}

}  // namespace ccodes
