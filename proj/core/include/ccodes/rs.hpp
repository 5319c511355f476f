#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ccodes/field.hpp"
#include "ccodes/linalg.hpp"
#include "ccodes/poly.hpp"

namespace ccodes {

/// [n, k] Reed-Solomon code in evaluation form: a message polynomial of
/// degree < k is evaluated at the n nodes of the defining set, in order.
class RSCode {
 public:
  /// Throws InvalidInput when nodes repeat, fall outside the field, n > q, or
  /// k is outside [1, n].
  RSCode(Field field, std::vector<Felt> nodes, std::size_t k);

  const Field& field() const noexcept { return field_; }
  std::span<const Felt> nodes() const noexcept { return nodes_; }
  std::size_t length() const noexcept { return nodes_.size(); }
  std::size_t dimension() const noexcept { return k_; }
  /// floor((n - k) / 2)
  std::size_t error_radius() const noexcept { return (length() - k_) / 2; }

  /// k x n Vandermonde matrix, entry (r, j) = node_j^r.
  Matrix generator() const;

  /// Evaluations of sum_i message[i] x^i; message must have k entries.
  std::vector<Felt> encode(std::span<const Felt> message) const;
  std::vector<Felt> encode(const Poly& message) const;

 private:
  Field field_;
  std::vector<Felt> nodes_;
  std::size_t k_;
};

/// {0, 1, alpha, alpha^2, ..., alpha^(n-2)}, truncated to n nodes.
std::vector<Felt> default_defining_set(const Field& f, std::size_t n);

struct RSDecodeResult {
  Poly message;
  std::vector<std::size_t> error_positions;
};

/// Berlekamp-Welch decoding of up to error_radius() symbol errors. Throws
/// DecodeFailure when no polynomial of degree < k lies within the radius.
RSDecodeResult rs_decode(const RSCode& code, std::span<const Felt> received);

/// Interpolation from the unerased positions (nullopt marks an erasure),
/// then a consistency check against every unerased symbol. Throws
/// DecodeFailure when fewer than k symbols survive or they are inconsistent.
Poly rs_erasure_decode(const RSCode& code, std::span<const std::optional<Felt>> received);

}  // namespace ccodes
