#include <ostream>
#include <string>
#include <vector>

#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/poly.hpp"
#include "ccodes/rs.hpp"
#include "ccodes/verify.hpp"
#include "cli.hpp"

namespace ccodes::cli {

namespace {

// Built-in example: three message symbols, seven code symbols.
const std::vector<std::vector<int>> kExampleGraph = {
    {1, 0, 0, 1, 1, 1, 1},
    {1, 1, 1, 0, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 1},
};

const std::vector<std::vector<int>> kExpectedMatched = {
    {1, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 1},
};

// Reference generator as powers of alpha; -1 marks a zero entry.
const int kReferenceExponents[3][7] = {
    {0, -1, -1, 2, 5, 0, 5},
    {-1, 0, -1, -1, 0, 4, 0},
    {-1, -1, 0, 5, 5, 2, 0},
};

struct ReferencePoly {
  int scale_exponent;
  std::vector<int> root_exponents;  // -1 is the root 0
};

// t_1 = a^5 (x-1)(x-a), t_2 = a^4 x(x-a)(x-a^2), t_3 = a^3 x(x-1)
const ReferencePoly kReferencePolys[3] = {
    {5, {0, 1}},
    {4, {-1, 1, 2}},
    {3, {-1, 0}},
};

void print_rows(std::ostream& out, const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows) {
    out << "   ";
    for (int x : r) out << ' ' << x;
    out << '\n';
  }
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "   ";
    for (auto x : m.row(i)) out << ' ' << x;
    out << '\n';
  }
}

std::string root_list(const std::vector<Felt>& roots) {
  std::string s;
  for (auto r : roots) s += "(x - " + std::to_string(r) + ")";
  return s;
}

}  // namespace

int run_demo(const DemoOptions& opts, std::ostream& out, std::ostream& err) {
  const auto g = ConstraintGraph::from_rows(kExampleGraph);
  const Field f = Field::make(opts.p, 1, opts.alpha);
  const Felt alpha = f.primitive();
  const bool compare = f.order() == 7;
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    out << "  check " << what << ": " << (cond ? "OK" : "MISMATCH") << '\n';
    ok = ok && cond;
  };

  out << "Constraint graph (s = " << g.messages() << ", n = " << g.length() << "):\n";
  print_rows(out, g.adjacency().to_rows());

  const auto rep = bounds_report(g);
  out << "d_min = " << rep.d_min << " (witness rows";
  for (auto i : rep.witness_subset) out << ' ' << i + 1;
  out << "), k_min = " << rep.k_min << '\n';
  out << "fully connected symbols a = " << rep.a << ", r_M = " << rep.r_m
      << ", systematic d_min construction feasible: " << (rep.thm2_feasible ? "yes" : "no") << '\n';
  out << "k_sys = " << rep.k_sys << ", d_sys = " << rep.d_sys << " (" << (rep.search_exact ? "exact" : "heuristic")
      << ")\n";
  check(rep.d_min == 5, "d_min == 5");
  check(rep.d_sys == 4, "d_sys == 4");

  out << "Matching:";
  for (std::size_t i = 0; i < rep.witness_matching.column.size(); ++i)
    out << " (m" << i + 1 << ", c" << rep.witness_matching.column[i] + 1 << ")";
  out << '\n';
  const auto matched = matched_adjacency(g, rep.witness_matching);
  out << "Removed edges:";
  for (std::size_t i = 0; i < g.messages(); ++i)
    for (std::size_t j = 0; j < g.length(); ++j)
      if (g.edge(i, j) && !matched.matrix(i, j)) out << " (m" << i + 1 << ", c" << j + 1 << ")";
  out << "\nMatched adjacency:\n";
  print_rows(out, matched.matrix.to_rows());
  if (compare) check(matched.matrix.to_rows() == kExpectedMatched, "matched adjacency zero pattern");

  const auto nodes = default_defining_set(f, g.length());
  out << "Field GF(" << f.order() << "), alpha = " << alpha << ", defining set:";
  for (auto x : nodes) out << ' ' << x;
  out << '\n';

  const auto spec = systematic_dsys(g, f, nodes);
  for (std::size_t i = 0; i < g.messages(); ++i) {
    std::vector<Felt> roots;
    for (auto j : matched.matrix.zero_set(i)) roots.push_back(nodes[j]);
    const Poly ti(std::vector<Felt>(spec.transform.row(i).begin(), spec.transform.row(i).end()));
    out << "t_" << i + 1 << "(x) = " << ti.leading() << " * " << root_list(roots) << " = " << to_string(ti) << '\n';
    if (compare) {
      const auto& ref = kReferencePolys[i];
      std::vector<Felt> ref_roots;
      for (int e : ref.root_exponents) ref_roots.push_back(e < 0 ? 0 : f.exp(e));
      const Poly expected = scale(f, from_roots(f, ref_roots), f.exp(ref.scale_exponent));
      check(ti == expected, "t_" + std::to_string(i + 1) + " against reference polynomial");
    }
  }

  out << "G_sys:\n";
  print_matrix(out, spec.generator);
  const auto dist = min_distance_exhaustive(spec);
  out << "exhaustive minimum distance = " << dist.distance << '\n';
  check(dist.distance == rep.d_sys, "distance == d_sys");
  check(validity_check(g, spec.generator), "generator respects the graph");

  if (!compare) {
    out << "reference comparison skipped: GF(" << f.order() << ") differs from GF(7)\n";
    return ok ? kOk : kMismatch;
  }
  Matrix reference(3, 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      reference(i, j) = kReferenceExponents[i][j] < 0 ? 0 : f.exp(kReferenceExponents[i][j]);
  const bool same = reference == spec.generator;
  ok = ok && same;
  if (!same) {
    out << "reference matrix with alpha = " << alpha << ":\n";
    print_matrix(out, reference);
    err << "constructed G_sys differs from the reference matrix (alpha = " << alpha << ")\n";
  }
  out << "G_sys matches reference matrix: " << (same ? "OK" : "MISMATCH") << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace ccodes::cli
