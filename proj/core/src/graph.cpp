#include "ccodes/graph.hpp"

#include <bit>
#include <functional>
#include <string>

#include "ccodes/error.hpp"

namespace ccodes {

namespace {

std::size_t popcount_words(std::span<const std::uint64_t> w) noexcept {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::string subset_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool augment(const Adjacency& a, const std::vector<bool>& allowed, std::size_t row,
             std::vector<bool>& visited, std::vector<std::size_t>& col_owner,
             std::vector<std::size_t>& row_col) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!a(row, j) || visited[j] || (!allowed.empty() && !allowed[j])) continue;
    visited[j] = true;
    if (col_owner[j] == kNone || augment(a, allowed, col_owner[j], visited, col_owner, row_col)) {
      col_owner[j] = row;
      row_col[row] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

Adjacency Adjacency::from_rows(const std::vector<std::vector<int>>& rows) {
  Adjacency a(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols_)
      throw InvalidInput("adjacency row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(a.cols_));
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw InvalidInput("adjacency entries must be 0 or 1");
      a.set(i, j, rows[i][j] == 1);
    }
  }
  return a;
}

std::size_t Adjacency::row_ones(std::size_t i) const noexcept {
  std::size_t c = 0;
  for (std::size_t j = 0; j < cols_; ++j) c += (*this)(i, j);
  return c;
}

std::size_t Adjacency::col_ones(std::size_t j) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows_; ++i) c += (*this)(i, j);
  return c;
}

std::vector<std::size_t> Adjacency::zero_set(std::size_t i) const {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(i, j)) z.push_back(j);
  return z;
}

std::vector<std::vector<int>> Adjacency::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j) ? 1 : 0;
  return out;
}

ConstraintGraph::ConstraintGraph(Adjacency a) : a_(std::move(a)) {
  const std::size_t s = a_.rows();
  const std::size_t n = a_.cols();
  if (s == 0 || n == 0) throw InvalidInput("constraint graph must have at least one row and one column");
  if (s > n)
    throw InvalidInput("constraint graph has more message symbols (" + std::to_string(s) +
                       ") than code symbols (" + std::to_string(n) + ")");
  for (std::size_t i = 0; i < s; ++i)
    if (a_.row_ones(i) == 0) throw InvalidInput("message symbol " + std::to_string(i) + " has no edges");
  for (std::size_t j = 0; j < n; ++j)
    if (a_.col_ones(j) == 0) throw InvalidInput("code symbol " + std::to_string(j) + " has no edges");

  words_ = (n + 63) / 64;
  row_bits_.assign(s * words_, 0);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a_(i, j)) row_bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

std::vector<std::size_t> ConstraintGraph::fully_connected() const {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < length(); ++j)
    if (a_.col_ones(j) == messages()) cols.push_back(j);
  return cols;
}

std::size_t neighborhood_size(const ConstraintGraph& g, std::span<const std::size_t> subset) {
  std::vector<std::uint64_t> acc(g.words(), 0);
  for (auto i : subset) {
    if (i >= g.messages()) throw InvalidInput("row index " + std::to_string(i) + " out of range");
    const auto bits = g.row_bits(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= bits[w];
  }
  return popcount_words(acc);
}

HallResult hall_check(const ConstraintGraph& g, std::size_t max_s) {
  const std::size_t s = g.messages();
  if (s > max_s)
    throw GuardExceeded("Hall check needs 2^" + std::to_string(s) + " subsets; s exceeds the guard of " +
                        std::to_string(max_s) + " (raise --max-subset-s)");
  // Depth-first enumeration visits subsets in lexicographic order of their
  // sorted index lists, so the first violator found is the smallest.
  const std::size_t words = g.words();
  std::vector<std::vector<std::uint64_t>> stack(s + 1, std::vector<std::uint64_t>(words, 0));
  std::vector<std::size_t> current;
  HallResult result;

  std::function<bool(std::size_t)> visit = [&](std::size_t start) -> bool {
    const std::size_t depth = current.size();
    for (std::size_t i = start; i < s; ++i) {
      const auto bits = g.row_bits(i);
      auto& next = stack[depth + 1];
      for (std::size_t w = 0; w < words; ++w) next[w] = stack[depth][w] | bits[w];
      current.push_back(i);
      if (popcount_words(next) < current.size()) {
        result.holds = false;
        result.violating = current;
        return true;
      }
      if (visit(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  visit(0);
  return result;
}

std::optional<Matching> try_find_matching(const Adjacency& a, const std::vector<bool>& allowed) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  if (!allowed.empty() && allowed.size() != a.cols()) throw InvalidInput("allowed-column mask has wrong size");
  std::vector<std::size_t> col_owner(a.cols(), kNone);
  std::vector<std::size_t> row_col(a.rows(), kNone);

  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) && col_owner[j] == kNone && (allowed.empty() || allowed[j])) {
        col_owner[j] = i;
        row_col[i] = j;
        break;
      }

  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (row_col[i] != kNone) continue;
    std::vector<bool> visited(a.cols(), false);
    if (!augment(a, allowed, i, visited, col_owner, row_col)) return std::nullopt;
  }
  return Matching{std::move(row_col)};
}

Matching find_matching(const ConstraintGraph& g, std::size_t max_s) {
  if (auto m = try_find_matching(g.adjacency())) return *std::move(m);
  std::string msg = "no matching covers every message symbol";
  if (g.messages() <= max_s) msg += "; Hall's condition fails on rows " + subset_string(hall_check(g, max_s).violating);
  throw Infeasible(msg);
}

bool is_valid_matching(const Adjacency& a, const Matching& m) noexcept {
  if (m.column.size() != a.rows()) return false;
  std::vector<bool> used(a.cols(), false);
  for (std::size_t i = 0; i < m.column.size(); ++i) {
    const std::size_t j = m.column[i];
    if (j >= a.cols() || used[j] || !a(i, j)) return false;
    used[j] = true;
  }
  return true;
}

MatchedAdjacency matched_adjacency(const ConstraintGraph& g, const Matching& m) {
  if (!is_valid_matching(g.adjacency(), m)) throw InvalidInput("matching is not valid for this graph");
  Adjacency out = g.adjacency();
  for (std::size_t i = 0; i < m.column.size(); ++i)
    for (std::size_t r = 0; r < out.rows(); ++r) out.set(r, m.column[i], r == i);
  return {std::move(out), m};
}

RowZeroStats row_zero_stats(const Adjacency& a) {
  RowZeroStats st;
  st.per_row.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    st.per_row[i] = a.cols() - a.row_ones(i);
    st.max_zeros = std::max(st.max_zeros, st.per_row[i]);
  }
  return st;
}

}  // namespace ccodes
