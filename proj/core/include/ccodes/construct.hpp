#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ccodes/bounds.hpp"
#include "ccodes/field.hpp"
#include "ccodes/graph.hpp"
#include "ccodes/linalg.hpp"

namespace ccodes {

enum class Mode { generic, systematic_dmin, systematic_dsys, mds_nullspace };

std::string_view to_string(Mode m) noexcept;
/// Accepts "generic", "systematic-dmin", "systematic-dsys", "mds-nullspace".
Mode parse_mode(std::string_view s);

/// A linear code valid for a constraint graph, built as G = T * G_base where
/// G_base is the generator of an [n, k] Reed-Solomon (or other MDS) code.
struct CodeSpec {
  Field field;
  /// RS nodes of the base code; empty when the base was an arbitrary MDS
  /// generator (such codes cannot be decoded by this library).
  std::vector<Felt> defining_set;
  std::size_t k = 0;
  Matrix transform;  // s x k
  Matrix generator;  // s x n
  Mode mode = Mode::generic;
  /// Systematic columns j(i), present for systematic codes.
  std::optional<Matching> matching;
  std::size_t claimed_distance = 0;
  /// True when claimed_distance is the exact minimum distance rather than a
  /// lower bound.
  bool distance_exact = false;

  std::size_t messages() const noexcept { return generator.rows(); }
  std::size_t length() const noexcept { return generator.cols(); }
  bool systematic() const noexcept { return matching.has_value(); }
};

/// Column bookkeeping for the systematic construction that attains d_min.
struct SystematicPlan {
  std::size_t d_min = 0;
  std::size_t k = 0;                     // n - d_min + 1
  std::vector<std::size_t> fully_connected;
  std::vector<std::size_t> kept;         // the a - (d_min - 1) lowest fully connected columns
  std::vector<std::size_t> excluded;     // remaining d_min - 1 fully connected columns
  std::vector<bool> allowed_columns;     // all columns except `excluded`
  MatchedAdjacency matched;              // over the full column set
};

/// Throws Infeasible when k_min < r_M or no matching avoids the excluded
/// columns.
SystematicPlan plan_systematic_dmin(const ConstraintGraph& g, std::size_t max_subset_s = kDefaultSubsetGuard);

/// Rows t_i(x) = prod over zeros of row i of (x - node_j), monic, with
/// k > max zeros per row. Throws InvalidInput when k is too small.
CodeSpec generic_subcode(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes, std::size_t k);

/// Systematic code with distance exactly d_min. Requires k_min >= r_M.
CodeSpec systematic_dmin(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes,
                         std::size_t max_subset_s = kDefaultSubsetGuard);

/// Systematic code with distance d_sys, built on the k_sys-optimal matching.
/// Past the exact-search guard the heuristic matching is used instead.
CodeSpec systematic_dsys(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes,
                         std::size_t max_exact_s = kDefaultExactGuard);

/// Builds each row as h_i * G_base with h_i in the left nullspace of the
/// base columns where row i must vanish. The zero sets come from the matched
/// adjacency when a matching is given (systematic output, [G]_{i,j(i)} = 1)
/// and from the graph otherwise. h_i is chosen so that row i vanishes only
/// on its zero set.
///
/// base_generator must be k x n MDS with k = n - target_distance + 1.
/// `nodes` records the RS defining set of the base when there is one.
CodeSpec mds_nullspace_construct(const ConstraintGraph& g, const Field& f, const Matrix& base_generator,
                                 std::size_t target_distance, const std::optional<Matching>& matching,
                                 std::span<const Felt> nodes = {});

/// True iff every structural zero of the graph is zero in G.
bool validity_check(const ConstraintGraph& g, const Matrix& generator);

struct ConstructOptions {
  std::optional<Field> field;                     // default GF(smallest prime >= n)
  std::optional<std::vector<Felt>> defining_set;  // default {0, 1, alpha, ...}
  std::optional<std::size_t> k;                   // generic mode only
  BoundsOptions guards;
};

Field default_field(const ConstraintGraph& g);

/// Dispatches on mode with defaults filled in. mds-nullspace is fed the RS
/// generator with k = k_sys and the optimal matching.
CodeSpec construct(const ConstraintGraph& g, Mode mode, const ConstructOptions& opts = {});

}  // namespace ccodes
