#include "ccodes/poly.hpp"

#include <algorithm>

#include "ccodes/error.hpp"

namespace ccodes {

Poly::Poly(std::vector<Felt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Felt c, std::size_t d) {
  std::vector<Felt> v(d + 1, 0);
  v[d] = c;
  return Poly(std::move(v));
}

std::vector<Felt> Poly::padded(std::size_t len) const {
  if (c_.size() > len) throw InvalidInput("polynomial degree does not fit the requested length");
  std::vector<Felt> v(c_);
  v.resize(len, 0);
  return v;
}

Poly from_roots(const Field& f, std::span<const Felt> roots) {
  std::vector<Felt> c{1};
  c.reserve(roots.size() + 1);
  for (Felt r : roots) {
    // Multiply by (x - r).
    const Felt neg_r = f.neg(r);
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(neg_r, c[i]));
    c[0] = f.mul(neg_r, c[0]);
  }
  return Poly(std::move(c));
}

Felt eval(const Field& f, const Poly& p, Felt x) {
  Felt acc = 0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Felt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Felt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Felt> c(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(ac[i], bc[j]));
  }
  return Poly(std::move(c));
}

Poly scale(const Field& f, const Poly& a, Felt s) {
  std::vector<Felt> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = f.mul(x, s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Felt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Felt lead_inv = f.inv(bc.back());
  std::vector<Felt> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Felt factor = f.mul(rem[i], lead_inv);
    quot[i - db] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, bc[j]));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ccodes
