#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccodes/field.hpp"

namespace ccodes {

/// Univariate polynomial over a finite field, dense coefficients with the
/// constant term first. Trailing zeros are stripped on construction, so the
/// zero polynomial has no coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Felt> coeffs);

  static Poly constant(Felt c) { return Poly({c}); }
  /// The monomial c * x^d.
  static Poly monomial(Felt c, std::size_t d);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const Felt> coeffs() const noexcept { return c_; }
  Felt coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Felt leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  /// Coefficient vector zero-padded to the given length; throws if the
  /// polynomial does not fit.
  std::vector<Felt> padded(std::size_t len) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Felt> c_;
};

/// Monic polynomial prod (x - r) over the given roots (multiset).
Poly from_roots(const Field& f, std::span<const Felt> roots);

Felt eval(const Field& f, const Poly& p, Felt x);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Felt c);

/// Quotient and remainder with deg(remainder) < deg(b). Throws InvalidInput
/// when b is the zero polynomial.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);

/// Human-readable form such as "6x^2 + x".
std::string to_string(const Poly& p);

}  // namespace ccodes
