#pragma once

// Brute-force reference implementations used only by tests. They share no
// code paths with the library beyond the Field type and the graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "ccodes/field.hpp"
#include "ccodes/graph.hpp"
#include "ccodes/linalg.hpp"

namespace oracle {

using ccodes::ConstraintGraph;
using ccodes::Felt;
using ccodes::Field;
using ccodes::Matrix;

inline std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Smallest generator of (Z/p)^* by listing the powers of each candidate.
inline std::uint32_t smallest_generator_mod_p(std::uint32_t p) {
  for (std::uint32_t g = 1; g < p; ++g) {
    std::vector<bool> seen(p, false);
    std::uint64_t x = 1;
    std::size_t distinct = 0;
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
      if (!seen[x]) ++distinct;
      seen[x] = true;
      x = x * g % p;
    }
    if (distinct == p - 1) return g;
  }
  return 0;
}

/// Smallest irreducible binary polynomial of degree m: a polynomial is
/// reducible iff it equals a product of two polynomials of positive degree;
/// enumerate all such products.
inline std::uint32_t smallest_irreducible_by_products(std::uint32_t m) {
  std::vector<bool> reducible(2u << m, false);
  auto clmul = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    for (int i = 0; b >> i; ++i)
      if ((b >> i) & 1u) r ^= a << i;
    return r;
  };
  for (std::uint32_t a = 2; a < (1u << m); ++a)
    for (std::uint32_t b = 2; b < (1u << m); ++b) {
      const auto c = clmul(a, b);
      if (c < (2u << m)) reducible[c] = true;
    }
  for (std::uint32_t p = 1u << m; p < (2u << m); ++p)
    if (!reducible[p]) return p;
  return 0;
}

inline std::size_t union_size(const ConstraintGraph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < g.length(); ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < g.messages(); ++i)
      if (((mask >> i) & 1u) && g.edge(i, j)) hit = true;
    count += hit;
  }
  return count;
}

/// min over nonempty masks of |N(M')| - |M'| + 1, plain double loop.
inline long long d_min_bruteforce(const ConstraintGraph& g) {
  long long best = std::numeric_limits<long long>::max();
  for (std::uint32_t mask = 1; mask < (1u << g.messages()); ++mask)
    best = std::min(best, static_cast<long long>(union_size(g, mask)) - std::popcount(mask) + 1);
  return best;
}

/// Every row-covering matching, by trying all n^s assignments.
inline std::vector<std::vector<std::size_t>> all_matchings(const ConstraintGraph& g) {
  const std::size_t s = g.messages();
  const std::size_t n = g.length();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> col(s, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i) {
      if (!g.edge(i, col[i])) ok = false;
      for (std::size_t r = 0; r < i && ok; ++r)
        if (col[r] == col[i]) ok = false;
    }
    if (ok) out.push_back(col);
    std::size_t pos = s;
    while (pos > 0) {
      --pos;
      if (++col[pos] < n) break;
      col[pos] = 0;
      if (pos == 0) return out;
    }
    if (s == 0) return out;
  }
}

/// k of a matching straight from the definition of the matched adjacency.
inline std::size_t k_of(const ConstraintGraph& g, const std::vector<std::size_t>& col) {
  std::size_t worst = 0;
  for (std::size_t i = 0; i < g.messages(); ++i) {
    std::size_t zeros = 0;
    for (std::size_t j = 0; j < g.length(); ++j) {
      auto owner = std::find(col.begin(), col.end(), j);
      bool one = owner == col.end() ? g.edge(i, j) : static_cast<std::size_t>(owner - col.begin()) == i;
      zeros += !one;
    }
    worst = std::max(worst, zeros);
  }
  return worst + 1;
}

inline std::size_t k_sys_bruteforce(const ConstraintGraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& m : all_matchings(g)) best = std::min(best, k_of(g, m));
  return best;
}

/// Minimum nonzero codeword weight over all q^s messages (no shortcuts).
inline std::size_t min_distance_naive(const Field& f, const Matrix& gen) {
  const std::size_t s = gen.rows();
  const std::size_t n = gen.cols();
  const std::uint32_t q = f.order();
  std::vector<Felt> msg(s, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::size_t pos = s;
    bool advanced = false;
    while (pos > 0 && !advanced) {
      --pos;
      msg[pos] = (msg[pos] + 1) % q;
      advanced = msg[pos] != 0;
    }
    if (!advanced) break;
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Felt acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc = f.add(acc, f.mul(msg[i], gen(i, j)));
      w += acc != 0;
    }
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

/// Random graph satisfying the container invariants (no empty row/column).
inline ConstraintGraph random_graph(std::mt19937_64& rng, std::size_t max_s, std::size_t max_n) {
  while (true) {
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, max_s)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(s, 2), max_n)(rng);
    const double density = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<int>> rows(s, std::vector<int>(n));
    for (auto& r : rows)
      for (auto& x : r) x = edge(rng);
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) ok = ok && std::count(rows[i].begin(), rows[i].end(), 1) > 0;
    for (std::size_t j = 0; j < n && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < s; ++i) any = any || rows[i][j];
      ok = any;
    }
    if (ok) return ConstraintGraph::from_rows(rows);
  }
}

inline std::vector<std::vector<int>> example_rows() {
  return {{1, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1, 1}};
}

}  // namespace oracle
