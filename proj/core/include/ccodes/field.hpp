#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ccodes {

/// A field element in its canonical integer encoding: the residue for prime
/// fields, the coefficient bit-vector for GF(2^m).
using Felt = std::uint32_t;

/// Finite field GF(p^m) with q = p^m <= 2^16 and log/antilog tables.
///
/// Extension fields are supported only in characteristic 2. The object is
/// immutable and cheap to copy (tables are shared).
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^m). The reduction polynomial defaults to the smallest
  /// irreducible of degree m (integer encoding) and the primitive element to
  /// the smallest generator. Overrides are validated.
  static Field make(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<Felt> alpha = std::nullopt,
                    std::optional<std::uint32_t> reduction_poly = std::nullopt);

  std::uint32_t characteristic() const noexcept { return t_->p; }
  std::uint32_t degree() const noexcept { return t_->m; }
  std::uint32_t order() const noexcept { return t_->q; }
  Felt primitive() const noexcept { return t_->alpha; }

  /// Reduction polynomial as a bit mask including the leading term (0 when m == 1).
  std::uint32_t reduction_poly() const noexcept { return t_->poly; }
  /// Reduction polynomial coefficients, constant term first (empty when m == 1).
  std::vector<std::uint32_t> reduction_coeffs() const;

  bool contains(Felt a) const noexcept { return a < t_->q; }

  Felt add(Felt a, Felt b) const noexcept {
    if (t_->m > 1 || t_->p == 2) return a ^ b;
    const Felt s = a + b;
    return s >= t_->p ? s - t_->p : s;
  }
  Felt neg(Felt a) const noexcept {
    if (t_->m > 1 || t_->p == 2 || a == 0) return a;
    return t_->p - a;
  }
  Felt sub(Felt a, Felt b) const noexcept { return add(a, neg(b)); }
  Felt mul(Felt a, Felt b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, std::int64_t e) const;

  /// Discrete log base alpha; a must be nonzero.
  std::uint32_t log(Felt a) const;
  /// alpha^e for any integer e (reduced mod q-1).
  Felt exp(std::int64_t e) const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->poly == b.t_->poly &&
           a.t_->alpha == b.t_->alpha;
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::uint32_t poly = 0;
    Felt alpha = 0;
    std::vector<Felt> exp;            // length 2(q-1), exp[i] = alpha^i
    std::vector<std::uint32_t> log;   // length q, log[0] unused
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Smallest prime >= n (n >= 0).
std::uint32_t next_prime(std::uint32_t n) noexcept;

/// True when the bit-encoded binary polynomial is irreducible over GF(2).
bool is_irreducible_gf2(std::uint32_t poly) noexcept;

/// Smallest (by integer encoding) irreducible binary polynomial of degree m.
std::uint32_t smallest_irreducible_gf2(std::uint32_t m);

}  // namespace ccodes
