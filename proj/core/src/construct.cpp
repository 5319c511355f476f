#include "ccodes/construct.hpp"

#include <algorithm>
#include <string>

#include "ccodes/error.hpp"
#include "ccodes/poly.hpp"
#include "ccodes/rs.hpp"

namespace ccodes {

namespace {

struct TransformRows {
  Matrix transform;
  Matrix generator;
};

// Row i of T holds the coefficients of prod_{j in zero set}(x - node_j),
// optionally normalized to 1 at node_{j(i)}.
TransformRows transform_from_zero_sets(const Field& f, const RSCode& rs, const Adjacency& pattern,
                                       const std::optional<Matching>& matching) {
  const std::size_t s = pattern.rows();
  const std::size_t k = rs.dimension();
  Matrix t(s, k);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Felt> roots;
    for (auto j : pattern.zero_set(i)) roots.push_back(rs.nodes()[j]);
    if (roots.size() + 1 > k)
      throw InvalidInput("row " + std::to_string(i) + " has " + std::to_string(roots.size()) +
                         " zeros; k = " + std::to_string(k) + " must exceed every row's zero count");
    Poly ti = from_roots(f, roots);
    if (matching) ti = scale(f, ti, f.inv(eval(f, ti, rs.nodes()[matching->column[i]])));
    const auto c = ti.padded(k);
    std::copy(c.begin(), c.end(), t.row(i).begin());
  }
  Matrix g = multiply(f, t, rs.generator());
  return {std::move(t), std::move(g)};
}

}  // namespace

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::generic: return "generic";
    case Mode::systematic_dmin: return "systematic-dmin";
    case Mode::systematic_dsys: return "systematic-dsys";
    case Mode::mds_nullspace: return "mds-nullspace";
  }
  return "generic";
}

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::generic, Mode::systematic_dmin, Mode::systematic_dsys, Mode::mds_nullspace})
    if (s == to_string(m)) return m;
  throw InvalidInput("unknown mode '" + std::string(s) +
                     "' (expected generic, systematic-dmin, systematic-dsys or mds-nullspace)");
}

SystematicPlan plan_systematic_dmin(const ConstraintGraph& g, std::size_t max_subset_s) {
  const std::size_t n = g.length();
  SystematicPlan plan;
  plan.d_min = d_min_bound(g, max_subset_s).d_min;
  if (plan.d_min == 0) throw Infeasible("Hall's condition fails; no code of full dimension exists");
  plan.k = n - plan.d_min + 1;
  plan.fully_connected = g.fully_connected();
  const std::size_t a = plan.fully_connected.size();
  const std::size_t r_m = n - a;
  if (plan.k < r_m)
    throw Infeasible("systematic d_min construction needs k_min >= r_M, but " + std::to_string(plan.k) + " < " +
                     std::to_string(r_m) + "; use --mode systematic-dsys");

  const std::size_t keep = a - (plan.d_min - 1);
  plan.kept.assign(plan.fully_connected.begin(), plan.fully_connected.begin() + static_cast<std::ptrdiff_t>(keep));
  plan.excluded.assign(plan.fully_connected.begin() + static_cast<std::ptrdiff_t>(keep), plan.fully_connected.end());
  plan.allowed_columns.assign(n, true);
  for (auto j : plan.excluded) plan.allowed_columns[j] = false;

  auto m = try_find_matching(g.adjacency(), plan.allowed_columns);
  if (!m) throw Infeasible("no matching avoids the reserved fully connected columns");
  plan.matched = matched_adjacency(g, *m);
  return plan;
}

namespace {

CodeSpec make_spec(const Field& f, const RSCode& rs, TransformRows rows, Mode mode,
                   std::optional<Matching> matching, std::size_t claimed, bool exact) {
  CodeSpec spec{f, {rs.nodes().begin(), rs.nodes().end()}, rs.dimension(), std::move(rows.transform),
                std::move(rows.generator), mode, std::move(matching), claimed, exact};
  return spec;
}

void check_nodes(const ConstraintGraph& g, std::span<const Felt> nodes) {
  if (nodes.size() != g.length())
    throw InvalidInput("defining set has " + std::to_string(nodes.size()) + " nodes; graph has n = " +
                       std::to_string(g.length()));
}

}  // namespace

CodeSpec generic_subcode(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes, std::size_t k) {
  check_nodes(g, nodes);
  const std::size_t n = g.length();
  const std::size_t max_zeros = row_zero_stats(g).max_zeros;
  if (k <= max_zeros)
    throw InvalidInput("k = " + std::to_string(k) + " is too small; rows have up to " + std::to_string(max_zeros) +
                       " zeros, so k must be at least " + std::to_string(max_zeros + 1));
  RSCode rs(f, {nodes.begin(), nodes.end()}, k);
  // A row with k - 1 zeros has weight n - k + 1, so the RS bound is tight
  // exactly when k is the smallest admissible value.
  return make_spec(f, rs, transform_from_zero_sets(f, rs, g.adjacency(), std::nullopt), Mode::generic,
                   std::nullopt, n - k + 1, max_zeros + 1 == k);
}

CodeSpec systematic_dmin(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes,
                         std::size_t max_subset_s) {
  check_nodes(g, nodes);
  auto plan = plan_systematic_dmin(g, max_subset_s);
  RSCode rs(f, {nodes.begin(), nodes.end()}, plan.k);
  if (row_zero_stats(plan.matched).max_zeros + 1 > plan.k)
    throw Infeasible("matched adjacency has a row with more than n - d_min zeros");
  auto rows = transform_from_zero_sets(f, rs, plan.matched.matrix, plan.matched.matching);
  return make_spec(f, rs, std::move(rows), Mode::systematic_dmin, plan.matched.matching, plan.d_min, true);
}

CodeSpec systematic_dsys(const ConstraintGraph& g, const Field& f, std::span<const Felt> nodes,
                         std::size_t max_exact_s) {
  check_nodes(g, nodes);
  const auto mode = g.messages() <= max_exact_s ? SearchMode::exact : SearchMode::heuristic;
  const auto ks = k_sys_search(g, mode, max_exact_s);
  const auto matched = matched_adjacency(g, ks.witness);
  RSCode rs(f, {nodes.begin(), nodes.end()}, ks.k_sys);
  auto rows = transform_from_zero_sets(f, rs, matched.matrix, ks.witness);
  // Any matching gives a row with k - 1 zeros, hence weight n - k + 1: the
  // distance is exact even when the matching came from the heuristic.
  return make_spec(f, rs, std::move(rows), Mode::systematic_dsys, ks.witness, g.length() - ks.k_sys + 1, true);
}

CodeSpec mds_nullspace_construct(const ConstraintGraph& g, const Field& f, const Matrix& base,
                                 std::size_t target_distance, const std::optional<Matching>& matching,
                                 std::span<const Felt> nodes) {
  const std::size_t s = g.messages();
  const std::size_t n = g.length();
  if (base.cols() != n)
    throw InvalidInput("base generator has " + std::to_string(base.cols()) + " columns; graph has n = " +
                       std::to_string(n));
  if (!nodes.empty()) check_nodes(g, nodes);
  const std::size_t k = base.rows();
  if (target_distance == 0 || target_distance > n || k != n - target_distance + 1)
    throw InvalidInput("base generator must have k = n - d* + 1 = " +
                       std::to_string(n + 1 - std::min(target_distance, n + 1)) + " rows");

  const Adjacency pattern = matching ? matched_adjacency(g, *matching).matrix : g.adjacency();
  Matrix h_rows(s, k);
  std::size_t max_zeros = 0;

  for (std::size_t i = 0; i < s; ++i) {
    const auto zeros = pattern.zero_set(i);
    max_zeros = std::max(max_zeros, zeros.size());
    if (zeros.size() > k - 1)
      throw Infeasible("row " + std::to_string(i) + " must vanish on " + std::to_string(zeros.size()) +
                       " positions, more than k - 1 = " + std::to_string(k - 1));
    const Matrix basis = left_nullspace(f, base.select_columns(zeros));
    if (basis.rows() != k - zeros.size())
      throw InvalidInput("base generator is not MDS: nullspace for row " + std::to_string(i) + " has dimension " +
                         std::to_string(basis.rows()));

    std::vector<Felt> h(basis.row(0).begin(), basis.row(0).end());
    auto value_at = [&](std::span<const Felt> v, std::size_t j) {
      Felt acc = 0;
      for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(v[r], base(r, j)));
      return acc;
    };

    // Visit every column outside the zero set (systematic column first) and
    // repair h where it vanishes by adding a multiple of a basis vector that
    // does not, keeping the earlier columns nonzero.
    std::vector<bool> is_zero(n, false);
    for (auto j : zeros) is_zero[j] = true;
    std::vector<std::size_t> order;
    if (matching) order.push_back(matching->column[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero[j] && (!matching || j != matching->column[i])) order.push_back(j);

    std::vector<std::size_t> done;
    for (auto j : order) {
      if (value_at(h, j) == 0) {
        std::size_t b = 0;
        while (b < basis.rows() && value_at(basis.row(b), j) == 0) ++b;
        if (b == basis.rows())
          throw InvalidInput("base generator is not MDS: column " + std::to_string(j) +
                             " vanishes on the whole nullspace");
        const auto bv = basis.row(b);
        bool repaired = false;
        for (Felt c = 1; c < f.order() && !repaired; ++c) {
          std::vector<Felt> cand(k);
          for (std::size_t r = 0; r < k; ++r) cand[r] = f.add(h[r], f.mul(c, bv[r]));
          if (value_at(cand, j) == 0) continue;
          if (std::any_of(done.begin(), done.end(), [&](std::size_t p) { return value_at(cand, p) == 0; })) continue;
          h = std::move(cand);
          repaired = true;
        }
        if (!repaired)
          throw Infeasible("field of order " + std::to_string(f.order()) + " too small to keep row " +
                           std::to_string(i) + " nonzero off its zero set");
      }
      done.push_back(j);
    }
    if (matching) {
      const Felt scale = f.inv(value_at(h, matching->column[i]));
      for (auto& x : h) x = f.mul(x, scale);
    }
    std::copy(h.begin(), h.end(), h_rows.row(i).begin());
  }

  Matrix gen = multiply(f, h_rows, base);
  CodeSpec spec{f, {nodes.begin(), nodes.end()}, k, std::move(h_rows), std::move(gen), Mode::mds_nullspace,
                matching, target_distance, max_zeros + 1 == k};
  return spec;
}

bool validity_check(const ConstraintGraph& g, const Matrix& generator) {
  if (generator.rows() != g.messages() || generator.cols() != g.length())
    throw InvalidInput("generator is " + std::to_string(generator.rows()) + "x" + std::to_string(generator.cols()) +
                       ", graph is " + std::to_string(g.messages()) + "x" + std::to_string(g.length()));
  for (std::size_t i = 0; i < g.messages(); ++i)
    for (std::size_t j = 0; j < g.length(); ++j)
      if (!g.edge(i, j) && generator(i, j) != 0) return false;
  return true;
}

Field default_field(const ConstraintGraph& g) {
  return Field::make(next_prime(static_cast<std::uint32_t>(std::max<std::size_t>(g.length(), 2))));
}

CodeSpec construct(const ConstraintGraph& g, Mode mode, const ConstructOptions& opts) {
  const Field f = opts.field ? *opts.field : default_field(g);
  const std::vector<Felt> nodes = opts.defining_set ? *opts.defining_set : default_defining_set(f, g.length());
  if (opts.k && mode != Mode::generic) throw InvalidInput("k can only be chosen in generic mode");
  switch (mode) {
    case Mode::generic:
      return generic_subcode(g, f, nodes, opts.k ? *opts.k : row_zero_stats(g).max_zeros + 1);
    case Mode::systematic_dmin:
      return systematic_dmin(g, f, nodes, opts.guards.max_subset_s);
    case Mode::systematic_dsys:
      return systematic_dsys(g, f, nodes, opts.guards.max_exact_s);
    case Mode::mds_nullspace: {
      const auto search = g.messages() <= opts.guards.max_exact_s ? SearchMode::exact : SearchMode::heuristic;
      const auto ks = k_sys_search(g, search, opts.guards.max_exact_s);
      check_nodes(g, nodes);
      RSCode rs(f, nodes, ks.k_sys);
      return mds_nullspace_construct(g, f, rs.generator(), g.length() - ks.k_sys + 1, ks.witness, nodes);
    }
  }
  throw InvalidInput("unknown construction mode");
}

}  // namespace ccodes
