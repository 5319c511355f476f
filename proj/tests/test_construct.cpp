#include <random>

#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/error.hpp"
#include "ccodes/rs.hpp"
#include "ccodes/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccodes;

namespace {

const Matrix kExampleGsys{{1, 0, 0, 2, 5, 1, 5}, {0, 1, 0, 0, 1, 4, 1}, {0, 0, 1, 5, 5, 2, 1}};

ConstraintGraph example() { return ConstraintGraph::from_rows(oracle::example_rows()); }

ConstraintGraph complete(std::size_t s, std::size_t n) {
  return ConstraintGraph::from_rows(std::vector<std::vector<int>>(s, std::vector<int>(n, 1)));
}

// Zero positions of G match the zero positions of the reference adjacency exactly.
bool same_zero_pattern(const Matrix& gen, const Adjacency& a) {
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < gen.cols(); ++j)
      if ((gen(i, j) != 0) != a(i, j)) return false;
  return true;
}

// Each row of G is the evaluation of the polynomial in the same row of T.
void check_factorization(const CodeSpec& spec) {
  const RSCode rs(spec.field, spec.defining_set, spec.k);
  for (std::size_t i = 0; i < spec.messages(); ++i) {
    const auto t = spec.transform.row(i);
    CHECK(rs.encode(t) == std::vector<Felt>(spec.generator.row(i).begin(), spec.generator.row(i).end()));
  }
  CHECK(spec.generator == multiply(spec.field, spec.transform, rs.generator()));
  CHECK(rank(spec.field, spec.generator) == rank(spec.field, spec.transform));
}

}  // namespace

TEST_CASE("mode names") {
  for (auto m : {Mode::generic, Mode::systematic_dmin, Mode::systematic_dsys, Mode::mds_nullspace})
    CHECK(parse_mode(to_string(m)) == m);
  CHECK(to_string(Mode::systematic_dsys) == "systematic-dsys");
  CHECK_THROWS_AS(parse_mode("fast"), InvalidInput);
}

TEST_CASE("systematic d_sys code of the example graph") {
  const auto g = example();
  const auto spec = construct(g, Mode::systematic_dsys);
  CHECK(spec.field.order() == 7);
  CHECK(spec.field.primitive() == 3);
  CHECK(spec.defining_set == std::vector<Felt>{0, 1, 3, 2, 6, 4, 5});
  CHECK(spec.k == 4);
  CHECK(spec.generator == kExampleGsys);
  CHECK(spec.transform == Matrix{{1, 1, 5, 0}, {0, 3, 1, 4}, {0, 1, 6, 0}});
  REQUIRE(spec.matching.has_value());
  CHECK(spec.matching->column == std::vector<std::size_t>{0, 1, 2});
  CHECK(spec.claimed_distance == 4);
  CHECK(spec.distance_exact);
  CHECK(validity_check(g, spec.generator));
  check_factorization(spec);
  CHECK(oracle::min_distance_naive(spec.field, spec.generator) == 4);
}

TEST_CASE("generic subcode") {
  const auto g = example();
  const auto f = Field::make(7);
  const auto nodes = default_defining_set(f, 7);
  // Max zeros per row is 2, so k = 3 is the smallest admissible dimension.
  const auto spec = construct(g, Mode::generic);
  CHECK(spec.k == 3);
  CHECK(spec.claimed_distance == 5);
  CHECK(spec.distance_exact);
  CHECK(same_zero_pattern(spec.generator, g.adjacency()));
  check_factorization(spec);
  CHECK(oracle::min_distance_naive(f, spec.generator) == 5);
  for (std::size_t i = 0; i < 3; ++i) CHECK(spec.transform(i, spec.k - 1) <= 1);

  const auto wide = generic_subcode(g, f, nodes, 4);
  CHECK(wide.claimed_distance == 4);
  CHECK_FALSE(wide.distance_exact);
  CHECK(validity_check(g, wide.generator));
  CHECK(oracle::min_distance_naive(f, wide.generator) >= 4);

  CHECK_THROWS_AS(generic_subcode(g, f, nodes, 2), InvalidInput);

  // All rows identical in an all-ones graph: the generic code collapses.
  const auto ones = generic_subcode(complete(3, 5), Field::make(5), default_defining_set(Field::make(5), 5), 1);
  CHECK(rank(ones.field, ones.generator) == 1);
}

TEST_CASE("systematic d_min code") {
  CHECK_THROWS_AS(construct(example(), Mode::systematic_dmin), Infeasible);

  const auto g = complete(3, 7);
  const auto plan = plan_systematic_dmin(g);
  CHECK(plan.d_min == 5);
  CHECK(plan.k == 3);
  CHECK(plan.kept == std::vector<std::size_t>{0, 1, 2});
  CHECK(plan.excluded == std::vector<std::size_t>{3, 4, 5, 6});
  const auto spec = construct(g, Mode::systematic_dmin);
  CHECK(spec.claimed_distance == 5);
  CHECK(spec.distance_exact);
  REQUIRE(spec.matching.has_value());
  CHECK(spec.matching->column == std::vector<std::size_t>{0, 1, 2});
  CHECK(oracle::min_distance_naive(spec.field, spec.generator) == 5);
  check_factorization(spec);

  const auto mixed = ConstraintGraph::from_rows({{1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}});
  const auto ms = construct(mixed, Mode::systematic_dmin);
  CHECK(ms.claimed_distance == d_min_bound(mixed).d_min);
  CHECK(oracle::min_distance_naive(ms.field, ms.generator) == ms.claimed_distance);
  CHECK(validity_check(mixed, ms.generator));
}

TEST_CASE("identity graph gives the identity code") {
  const auto g = ConstraintGraph::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(same_zero_pattern(construct(g, Mode::generic).generator, g.adjacency()));
  for (auto mode : {Mode::systematic_dmin, Mode::systematic_dsys, Mode::mds_nullspace}) {
    const auto spec = construct(g, mode);
    CHECK(spec.generator == Matrix::identity(3));
    CHECK(spec.claimed_distance == 1);
  }
}

TEST_CASE("complete 2x4 graph over GF(5)") {
  const auto g = complete(2, 4);
  ConstructOptions opts;
  opts.field = Field::make(5);
  const auto spec = construct(g, Mode::systematic_dsys, opts);
  CHECK(spec.k == 2);
  CHECK(spec.claimed_distance == 3);
  CHECK(oracle::min_distance_naive(spec.field, spec.generator) == 3);
  CHECK(spec.generator(0, 0) == 1);
  CHECK(spec.generator(0, 1) == 0);
  CHECK(spec.generator(1, 0) == 0);
  CHECK(spec.generator(1, 1) == 1);
}

TEST_CASE("options") {
  const auto g = example();
  ConstructOptions opts;
  opts.field = Field::make(11);
  const auto spec = construct(g, Mode::systematic_dsys, opts);
  CHECK(spec.defining_set == default_defining_set(Field::make(11), 7));
  CHECK(oracle::min_distance_naive(spec.field, spec.generator) == 4);

  opts.defining_set = std::vector<Felt>{1, 2, 3};
  CHECK_THROWS_AS(construct(g, Mode::systematic_dsys, opts), InvalidInput);
  opts.defining_set = std::vector<Felt>{0, 1, 2, 3, 4, 5, 5};
  CHECK_THROWS_AS(construct(g, Mode::systematic_dsys, opts), InvalidInput);

  opts = {};
  opts.field = Field::make(5);
  CHECK_THROWS_AS(construct(g, Mode::systematic_dsys, opts), InvalidInput);

  opts = {};
  opts.k = 5;
  CHECK(construct(g, Mode::generic, opts).k == 5);
  CHECK_THROWS_AS(construct(g, Mode::systematic_dsys, opts), InvalidInput);
}

TEST_CASE("MDS nullspace backend agrees with the polynomial backend") {
  const auto g = example();
  const auto poly = construct(g, Mode::systematic_dsys);
  const auto ns = construct(g, Mode::mds_nullspace);
  const auto matched = matched_adjacency(g, *poly.matching);
  CHECK(same_zero_pattern(ns.generator, matched.matrix));
  CHECK(same_zero_pattern(poly.generator, matched.matrix));
  CHECK(ns.claimed_distance == 4);
  CHECK(oracle::min_distance_naive(ns.field, ns.generator) == 4);
  CHECK(ns.systematic());
  for (std::size_t i = 0; i < 3; ++i) CHECK(ns.generator(i, ns.matching->column[i]) == 1);
  // Row 2 has k - 1 = 3 zeros, which pins it down up to scale.
  for (std::size_t j = 0; j < 7; ++j) CHECK(ns.generator(1, j) == poly.generator(1, j));
  check_factorization(ns);
}

TEST_CASE("validity check") {
  const auto g = example();
  CHECK(validity_check(g, kExampleGsys));
  auto tampered = kExampleGsys;
  tampered(0, 1) = 3;
  CHECK_FALSE(validity_check(g, tampered));
  CHECK_THROWS_AS(validity_check(g, Matrix{{1, 0, 0}}), InvalidInput);
}

TEST_CASE("constructed codes are valid, respect degree limits, and meet their claims") {
  std::mt19937_64 rng(404);
  int built = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 4, 7);
    if (!hall_check(g).holds) {
      CHECK_THROWS_AS(construct(g, Mode::systematic_dsys), Infeasible);
      continue;
    }
    const auto rep = bounds_report(g);
    for (auto mode : {Mode::generic, Mode::systematic_dmin, Mode::systematic_dsys, Mode::mds_nullspace}) {
      if (mode == Mode::systematic_dmin && !rep.thm2_feasible) {
        CHECK_THROWS_AS(construct(g, mode), Infeasible);
        continue;
      }
      const auto spec = construct(g, mode);
      ++built;
      CHECK(validity_check(g, spec.generator));
      CHECK(spec.transform.cols() == spec.k);
      check_factorization(spec);
      const auto d = oracle::min_distance_naive(spec.field, spec.generator);
      if (spec.distance_exact)
        CHECK(d == spec.claimed_distance);
      else
        CHECK(d >= spec.claimed_distance);
      // The cut-set bound covers codes that carry all s message symbols.
      const bool full_rank = rank(spec.field, spec.generator) == spec.messages();
      if (full_rank) CHECK(d <= rep.d_min);
      if (mode != Mode::generic) CHECK(full_rank);
      if (mode == Mode::systematic_dmin) CHECK(d == rep.d_min);
      if (mode == Mode::systematic_dsys || mode == Mode::mds_nullspace) CHECK(d == rep.d_sys);
      if (spec.systematic())
        for (std::size_t i = 0; i < spec.messages(); ++i)
          for (std::size_t r = 0; r < spec.messages(); ++r)
            CHECK(spec.generator(r, spec.matching->column[i]) == (r == i ? 1u : 0u));
    }
  }
  CHECK(built > 200);
}
