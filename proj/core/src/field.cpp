#include "ccodes/field.hpp"

#include <bit>
#include <string>

#include "ccodes/error.hpp"

namespace ccodes {

namespace {

std::uint32_t gf2_degree(std::uint32_t poly) noexcept {
  return poly == 0 ? 0 : static_cast<std::uint32_t>(std::bit_width(poly)) - 1;
}

// Remainder of a modulo b as binary polynomials.
std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t db = gf2_degree(b);
  while (a != 0 && gf2_degree(a) >= db) a ^= b << (gf2_degree(a) - db);
  return a;
}

Felt raw_mul(std::uint32_t p, std::uint32_t m, std::uint32_t poly, Felt a, Felt b) noexcept {
  if (m == 1) return static_cast<Felt>((static_cast<std::uint64_t>(a) * b) % p);
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << m)) a ^= poly;
  }
  return r;
}

// Multiplicative order of g, assuming g != 0.
std::uint32_t element_order(std::uint32_t p, std::uint32_t m, std::uint32_t poly, Felt g) {
  Felt x = g;
  std::uint32_t k = 1;
  while (x != 1) {
    x = raw_mul(p, m, poly, x, g);
    ++k;
  }
  return k;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime(std::uint32_t n) noexcept {
  while (!is_prime(n)) ++n;
  return n;
}

bool is_irreducible_gf2(std::uint32_t poly) noexcept {
  const std::uint32_t d = gf2_degree(poly);
  if (poly < 2) return false;
  if (d == 1) return true;
  for (std::uint32_t f = 2; gf2_degree(f) <= d / 2; ++f)
    if (gf2_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t smallest_irreducible_gf2(std::uint32_t m) {
  if (m == 0 || m > 16) throw InvalidInput("GF(2^m) degree must be in [1, 16]");
  for (std::uint32_t poly = 1u << m; poly < (2u << m); ++poly)
    if (is_irreducible_gf2(poly)) return poly;
  throw InvalidInput("no irreducible polynomial found");  // unreachable
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<Felt> alpha,
                  std::optional<std::uint32_t> reduction_poly) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidInput("field extension degree must be >= 1");
  if (m > 1 && p != 2)
    throw InvalidInput("extension fields are supported only in characteristic 2");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidInput("field order exceeds 2^16");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  if (m > 1) {
    if (reduction_poly) {
      if (gf2_degree(*reduction_poly) != m || !is_irreducible_gf2(*reduction_poly))
        throw InvalidInput("reduction polynomial is not an irreducible of degree " + std::to_string(m));
      t->poly = *reduction_poly;
    } else {
      t->poly = smallest_irreducible_gf2(m);
    }
  } else if (reduction_poly && *reduction_poly != 0) {
    throw InvalidInput("prime fields take no reduction polynomial");
  }

  const std::uint32_t group = t->q - 1;
  if (alpha) {
    if (*alpha == 0 || *alpha >= t->q || element_order(p, m, t->poly, *alpha) != group)
      throw InvalidInput("alpha = " + std::to_string(*alpha) + " is not a primitive element");
    t->alpha = *alpha;
  } else {
    Felt g = 1;
    while (element_order(p, m, t->poly, g) != group) ++g;
    t->alpha = g;
  }

  t->exp.resize(2 * static_cast<std::size_t>(group));
  t->log.assign(t->q, 0);
  Felt x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    t->exp[i] = x;
    t->exp[i + group] = x;
    t->log[x] = i;
    x = raw_mul(p, m, t->poly, x, t->alpha);
  }
  return Field(std::move(t));
}

std::vector<std::uint32_t> Field::reduction_coeffs() const {
  std::vector<std::uint32_t> c;
  if (t_->m == 1) return c;
  for (std::uint32_t i = 0; i <= t_->m; ++i) c.push_back((t_->poly >> i) & 1u);
  return c;
}

Felt Field::inv(Felt a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  const std::uint32_t group = t_->q - 1;
  return t_->exp[(group - t_->log[a]) % group];
}

Felt Field::pow(Felt a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw InvalidInput("negative power of zero");
    return 0;
  }
  const std::int64_t group = t_->q - 1;
  std::int64_t r = (static_cast<std::int64_t>(t_->log[a]) * (e % group)) % group;
  if (r < 0) r += group;
  return t_->exp[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Felt a) const {
  if (a == 0 || a >= t_->q) throw InvalidInput("log of zero or out-of-range element");
  return t_->log[a];
}

Felt Field::exp(std::int64_t e) const noexcept {
  const std::int64_t group = t_->q - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return t_->exp[static_cast<std::size_t>(r)];
}

}  // namespace ccodes
