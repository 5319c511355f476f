#include <random>

#include "ccodes/error.hpp"
#include "ccodes/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccodes;

namespace {

std::vector<std::size_t> mask_to_subset(std::uint32_t mask) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) s.push_back(i);
  return s;
}

// Every s x n 0/1 matrix with nonempty rows and columns.
template <typename Fn>
void for_each_graph(std::size_t s, std::size_t n, Fn&& fn) {
  const std::size_t cells = s * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    std::vector<std::vector<int>> rows(s, std::vector<int>(n));
    for (std::size_t c = 0; c < cells; ++c) rows[c / n][c % n] = (bits >> c) & 1u;
    try {
      fn(ConstraintGraph::from_rows(rows));
    } catch (const InvalidInput&) {
    }
  }
}

}  // namespace

TEST_CASE("load and validate") {
  const auto g = ConstraintGraph::from_rows(oracle::example_rows());
  CHECK(g.messages() == 3);
  CHECK(g.length() == 7);
  CHECK(ConstraintGraph::from_rows({{1}}).length() == 1);
  CHECK_THROWS_AS(ConstraintGraph::from_rows({{1, 0, 0}, {0, 1, 0}}), InvalidInput);  // zero column
  CHECK_THROWS_AS(ConstraintGraph::from_rows({{1, 1}, {0, 0}}), InvalidInput);        // zero row
  CHECK_THROWS_AS(ConstraintGraph::from_rows({{1, 1}, {1}}), InvalidInput);           // ragged
  CHECK_THROWS_AS(ConstraintGraph::from_rows({{1}, {1}}), InvalidInput);              // s > n
  CHECK_THROWS_AS(ConstraintGraph::from_rows({{1, 2}}), InvalidInput);
}

TEST_CASE("neighborhood sizes") {
  const auto g = ConstraintGraph::from_rows(oracle::example_rows());
  CHECK(neighborhood_size(g, std::vector<std::size_t>{0}) == 5);
  CHECK(neighborhood_size(g, std::vector<std::size_t>{0, 2}) == 6);
  CHECK(neighborhood_size(g, std::vector<std::size_t>{0, 1, 2}) == 7);
  CHECK(neighborhood_size(g, std::vector<std::size_t>{}) == 0);
  CHECK_THROWS_AS(neighborhood_size(g, std::vector<std::size_t>{3}), InvalidInput);
  CHECK(g.fully_connected() == std::vector<std::size_t>{4, 5, 6});
}

TEST_CASE("neighborhood size is monotone and submodular") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 6, 10);
    const std::uint32_t full = (1u << g.messages()) - 1;
    auto n_of = [&](std::uint32_t m) { return neighborhood_size(g, mask_to_subset(m)); };
    for (std::uint32_t a = 0; a <= full; ++a) {
      CHECK(n_of(a) == oracle::union_size(g, a));
      for (std::uint32_t b = 0; b <= full; ++b) {
        if ((a & b) == a) CHECK(n_of(a) <= n_of(b));
        CHECK(n_of(a | b) + n_of(a & b) <= n_of(a) + n_of(b));
      }
    }
  }
}

TEST_CASE("Hall check") {
  const auto g = ConstraintGraph::from_rows(oracle::example_rows());
  CHECK(hall_check(g).holds);

  const auto bad = ConstraintGraph::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 1}});
  const auto r = hall_check(bad);
  CHECK_FALSE(r.holds);
  CHECK(r.violating == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(find_matching(bad), Infeasible);

  std::vector<std::vector<int>> big(21, std::vector<int>(21, 1));
  CHECK_THROWS_AS(hall_check(ConstraintGraph::from_rows(big)), GuardExceeded);
}

TEST_CASE("find_matching follows the smallest-column tie-break") {
  const auto g = ConstraintGraph::from_rows(oracle::example_rows());
  CHECK(find_matching(g).column == std::vector<std::size_t>{0, 1, 2});
  const auto id = ConstraintGraph::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(find_matching(id).column == std::vector<std::size_t>{0, 1, 2});
  // Row 1 can only use column 0, so row 0 must be moved by an augmenting path.
  const auto aug = ConstraintGraph::from_rows({{1, 1}, {1, 0}});
  CHECK(find_matching(aug).column == std::vector<std::size_t>{1, 0});
}

TEST_CASE("Hall holds exactly when a matching exists (exhaustive, s <= 3, n <= 4)") {
  std::size_t graphs = 0;
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t n = s; n <= 4; ++n)
      for_each_graph(s, n, [&](const ConstraintGraph& g) {
        ++graphs;
        const bool brute = !oracle::all_matchings(g).empty();
        CHECK(hall_check(g).holds == brute);
        const auto m = try_find_matching(g.adjacency());
        CHECK(m.has_value() == brute);
        if (m) CHECK(is_valid_matching(g.adjacency(), *m));
      });
  CHECK(graphs > 1000);
}

TEST_CASE("Hall holds exactly when a matching exists (random, s <= 4, n <= 6)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = oracle::random_graph(rng, 4, 6);
    CHECK(hall_check(g).holds == !oracle::all_matchings(g).empty());
  }
}

TEST_CASE("matched adjacency") {
  const auto g = ConstraintGraph::from_rows(oracle::example_rows());
  const auto m = matched_adjacency(g, Matching{{0, 1, 2}});
  CHECK(m.matrix.to_rows() == std::vector<std::vector<int>>{
                                  {1, 0, 0, 1, 1, 1, 1}, {0, 1, 0, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1, 1}});
  CHECK(row_zero_stats(m).max_zeros == 3);
  CHECK(row_zero_stats(m).k() == 4);
  CHECK(row_zero_stats(g).max_zeros == 2);
  CHECK(row_zero_stats(g).per_row == std::vector<std::size_t>{2, 1, 2});

  const auto id = ConstraintGraph::from_rows({{1, 0}, {0, 1}});
  CHECK(matched_adjacency(id, Matching{{0, 1}}).matrix == id.adjacency());

  const auto complete = ConstraintGraph::from_rows({{1, 1, 1}, {1, 1, 1}});
  CHECK(matched_adjacency(complete, Matching{{0, 1}}).matrix.to_rows() ==
        std::vector<std::vector<int>>{{1, 0, 1}, {0, 1, 1}});

  std::vector<std::vector<int>> ones(2, std::vector<int>(4, 1));
  CHECK(row_zero_stats(ConstraintGraph::from_rows(ones)).max_zeros == 0);

  CHECK_THROWS_AS(matched_adjacency(g, Matching{{1, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(matched_adjacency(g, Matching{{1, 0, 2}}), InvalidInput);  // (m0, c1) is not an edge
}

TEST_CASE("matched adjacency only touches matched columns") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 5, 9);
    const auto m = try_find_matching(g.adjacency());
    if (!m) continue;
    const auto ma = matched_adjacency(g, *m);
    for (std::size_t j = 0; j < g.length(); ++j) {
      const auto owner = std::find(m->column.begin(), m->column.end(), j);
      for (std::size_t i = 0; i < g.messages(); ++i) {
        if (owner == m->column.end())
          CHECK(ma.matrix(i, j) == g.edge(i, j));
        else
          CHECK(ma.matrix(i, j) == (static_cast<std::size_t>(owner - m->column.begin()) == i));
      }
    }
  }
}
