#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ccodes/construct.hpp"
#include "ccodes/field.hpp"
#include "ccodes/linalg.hpp"
#include "ccodes/rs.hpp"

namespace ccodes {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

struct DistanceReport {
  std::size_t distance = 0;
  /// Lexicographically smallest nonzero message whose codeword has minimum weight.
  std::vector<Felt> witness_message;
  /// weight_histogram[w] = number of nonzero messages whose codeword has weight w.
  std::vector<std::uint64_t> weight_histogram;
};

/// Exact minimum distance of the code generated by the rows of G, by
/// enumerating every message. Throws GuardExceeded when q^s > guard and
/// InvalidInput when G generates only the zero word.
DistanceReport min_distance_exhaustive(const Field& f, const Matrix& generator,
                                       std::uint64_t guard = kDefaultEnumerationGuard);
inline DistanceReport min_distance_exhaustive(const CodeSpec& spec, std::uint64_t guard = kDefaultEnumerationGuard) {
  return min_distance_exhaustive(spec.field, spec.generator, guard);
}

inline std::size_t rank_over_field(const Matrix& m, const Field& f) { return rank(f, m); }

/// m * G.
std::vector<Felt> subcode_encode(const CodeSpec& spec, std::span<const Felt> message);

/// Decoder for an RS subcode. Holds the base RS code and a factorization of
/// T, so repeated decodes only pay for the RS step and one s x s product.
class SubcodeDecoder {
 public:
  /// Throws InvalidInput when the spec has no RS defining set or rank(T) < s.
  explicit SubcodeDecoder(const CodeSpec& spec);

  /// Corrects up to floor((n - k) / 2) errors, or, when erasures are given,
  /// recovers from erasures only. Throws DecodeFailure when the RS decoder
  /// fails or the decoded RS message lies outside the row space of T.
  std::vector<Felt> decode(std::span<const Felt> received, std::span<const std::size_t> erasures = {}) const;

  const RSCode& base() const noexcept { return rs_; }

 private:
  std::vector<Felt> solve(std::span<const Felt> rs_message) const;

  Field field_;
  RSCode rs_;
  Matrix transform_;
  std::vector<std::size_t> pivot_cols_;  // s columns of T forming an invertible block
  Matrix pivot_inverse_;                 // inverse of that block
};

std::vector<Felt> subcode_decode(const CodeSpec& spec, std::span<const Felt> received,
                                 std::span<const std::size_t> erasures = {});

struct FastReadResult {
  std::vector<Felt> message;
  /// True iff re-encoding the systematic symbols reproduces the received word.
  bool clean = false;
};

/// Reads the message straight from the systematic positions. Throws
/// InvalidInput for non-systematic specs.
FastReadResult systematic_fast_read(const CodeSpec& spec, std::span<const Felt> received);

}  // namespace ccodes

namespace ccodes {

struct VerifyReport {
  DistanceReport distance;
  std::size_t rank_g = 0;
  std::size_t rank_t = 0;
  bool valid_pattern = false;
  /// The columns named by the spec's matching hold an identity block.
  bool systematic = false;
};

VerifyReport verify_code(const CodeSpec& spec, const ConstraintGraph& g,
                         std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace ccodes
