#pragma once

#include <string>
#include <string_view>

#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/graph.hpp"
#include "ccodes/verify.hpp"

namespace ccodes {

// JSON artifacts. Field elements are written as integers in [0, q) and
// indices are 0-based. Parsers throw InvalidInput on malformed input.

/// {"s": int, "n": int, "adjacency": [[0/1, ...], ...]}
ConstraintGraph graph_from_json(std::string_view text);
std::string graph_to_json(const ConstraintGraph& g);

/// {d_min, k_min, d_sys, k_sys, exact, witness_subset, witness_matching, a, r_M, thm2_feasible}
std::string bounds_to_json(const BoundsReport& r);

/// {"field": {p, m, poly, alpha}, "defining_set", "k", "T", "G", "mode",
///  "matching", "claimed_distance", "distance_exact"}
std::string code_to_json(const CodeSpec& spec);
CodeSpec code_from_json(std::string_view text);

/// {distance, witness_message, rank_G, rank_T, valid_pattern, systematic}
std::string verify_to_json(const VerifyReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ccodes
