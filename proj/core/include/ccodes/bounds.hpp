#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ccodes/graph.hpp"

namespace ccodes {

struct DminResult {
  std::size_t d_min = 0;
  /// Lexicographically smallest nonempty row subset attaining the minimum.
  std::vector<std::size_t> witness;
};

/// Upper bound on the minimum distance of any code valid for g:
/// min over nonempty row subsets M' of |N(M')| - |M'| + 1.
DminResult d_min_bound(const ConstraintGraph& g, std::size_t max_s = kDefaultSubsetGuard);

enum class SearchMode { exact, heuristic };

inline constexpr std::size_t kDefaultExactGuard = 12;

struct KsysResult {
  std::size_t k_sys = 0;
  Matching witness;
  bool exact = false;
};

/// Smallest k over row-covering matchings of (max zeros in a row of the
/// matched adjacency) + 1.
///
/// Exact mode enumerates matchings depth-first (rows in order, columns
/// ascending) with branch-and-bound and returns the first optimal matching
/// in that order. Heuristic mode improves the greedy matching by single-row
/// moves and pairwise swaps and returns an upper bound.
///
/// Throws Infeasible when no matching exists and GuardExceeded when exact
/// mode is asked for s > max_exact_s.
KsysResult k_sys_search(const ConstraintGraph& g, SearchMode mode, std::size_t max_exact_s = kDefaultExactGuard);

/// k of the matched adjacency for a specific matching.
std::size_t k_of_matching(const ConstraintGraph& g, const Matching& m);

struct BoundsOptions {
  std::size_t max_subset_s = kDefaultSubsetGuard;
  std::size_t max_exact_s = kDefaultExactGuard;
};

struct BoundsReport {
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t d_min = 0;
  std::size_t k_min = 0;
  std::vector<std::size_t> witness_subset;
  bool has_matching = false;
  std::size_t k_sys = 0;  // meaningful only when has_matching
  std::size_t d_sys = 0;
  Matching witness_matching;
  bool search_exact = false;
  std::vector<std::size_t> fully_connected;
  std::size_t a = 0;
  std::size_t r_m = 0;
  bool thm2_feasible = false;
};

/// All bounds for g. k_sys comes from the exact search when s is within
/// max_exact_s and from the heuristic otherwise.
BoundsReport bounds_report(const ConstraintGraph& g, const BoundsOptions& opts = {});

}  // namespace ccodes
