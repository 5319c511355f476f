#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ccodes {

/// Dense s x n 0/1 matrix.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  /// Throws InvalidInput on ragged rows or entries other than 0/1.
  static Adjacency from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) noexcept { bits_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t row_ones(std::size_t i) const noexcept;
  std::size_t col_ones(std::size_t j) const noexcept;
  /// Column indices j with a zero in row i.
  std::vector<std::size_t> zero_set(std::size_t i) const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Bipartite encoding-constraint graph: message symbols (rows) and code
/// symbols (columns). Edge (i, j) means code symbol j may depend on message
/// symbol i.
///
/// Invariants: 1 <= s <= n, every row and every column has at least one edge.
class ConstraintGraph {
 public:
  explicit ConstraintGraph(Adjacency a);
  static ConstraintGraph from_rows(const std::vector<std::vector<int>>& rows) {
    return ConstraintGraph(Adjacency::from_rows(rows));
  }

  std::size_t messages() const noexcept { return a_.rows(); }
  std::size_t length() const noexcept { return a_.cols(); }
  bool edge(std::size_t i, std::size_t j) const noexcept { return a_(i, j); }
  const Adjacency& adjacency() const noexcept { return a_; }

  /// Row support of message i as a packed bitset of n bits.
  std::span<const std::uint64_t> row_bits(std::size_t i) const noexcept {
    return {row_bits_.data() + i * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

  /// Code symbols adjacent to every message symbol.
  std::vector<std::size_t> fully_connected() const;

  friend bool operator==(const ConstraintGraph& a, const ConstraintGraph& b) { return a.a_ == b.a_; }

 private:
  Adjacency a_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> row_bits_;
};

/// Row-to-column assignment: column[i] = j(i), injective, along edges.
struct Matching {
  std::vector<std::size_t> column;
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchedAdjacency {
  Adjacency matrix;
  Matching matching;
};

struct HallResult {
  bool holds = true;
  std::vector<std::size_t> violating;  // empty when holds
};

struct RowZeroStats {
  std::size_t max_zeros = 0;
  std::vector<std::size_t> per_row;
  std::size_t k() const noexcept { return max_zeros + 1; }
};

inline constexpr std::size_t kDefaultSubsetGuard = 20;

/// |N(subset)|; 0 for the empty subset. Throws InvalidInput on a bad index.
std::size_t neighborhood_size(const ConstraintGraph& g, std::span<const std::size_t> subset);

/// Exhaustive Hall check over all 2^s row subsets. The violating subset, if
/// any, is the smallest in lexicographic order of sorted index lists.
/// Throws GuardExceeded when s > max_s.
HallResult hall_check(const ConstraintGraph& g, std::size_t max_s = kDefaultSubsetGuard);

/// Row-covering matching restricted to the allowed columns (all when empty),
/// or nullopt. Rows are first matched greedily to their smallest free
/// column; remaining rows are placed by augmenting paths that scan columns in
/// ascending order.
std::optional<Matching> try_find_matching(const Adjacency& a, const std::vector<bool>& allowed_columns = {});

/// As try_find_matching over the whole graph; throws Infeasible naming a Hall
/// violator when no matching exists.
Matching find_matching(const ConstraintGraph& g, std::size_t max_s = kDefaultSubsetGuard);

bool is_valid_matching(const Adjacency& a, const Matching& m) noexcept;

/// Removes every non-matching edge into a matched column.
MatchedAdjacency matched_adjacency(const ConstraintGraph& g, const Matching& m);

RowZeroStats row_zero_stats(const Adjacency& a);
inline RowZeroStats row_zero_stats(const ConstraintGraph& g) { return row_zero_stats(g.adjacency()); }
inline RowZeroStats row_zero_stats(const MatchedAdjacency& m) { return row_zero_stats(m.matrix); }

}  // namespace ccodes
