#include "ccodes/rs.hpp"

#include <string>

#include "ccodes/error.hpp"

namespace ccodes {

RSCode::RSCode(Field field, std::vector<Felt> nodes, std::size_t k)
    : field_(std::move(field)), nodes_(std::move(nodes)), k_(k) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw InvalidInput("defining set is empty");
  if (n > field_.order())
    throw InvalidInput("code length " + std::to_string(n) + " exceeds field order " + std::to_string(field_.order()));
  if (k_ < 1 || k_ > n) throw InvalidInput("RS dimension k = " + std::to_string(k_) + " outside [1, n]");
  std::vector<bool> seen(field_.order(), false);
  for (Felt x : nodes_) {
    if (!field_.contains(x)) throw InvalidInput("defining-set element " + std::to_string(x) + " not in field");
    if (seen[x]) throw InvalidInput("defining set repeats element " + std::to_string(x));
    seen[x] = true;
  }
}

Matrix RSCode::generator() const {
  Matrix g(k_, length());
  for (std::size_t j = 0; j < length(); ++j) {
    Felt p = 1;
    for (std::size_t r = 0; r < k_; ++r) {
      g(r, j) = p;
      p = field_.mul(p, nodes_[j]);
    }
  }
  return g;
}

std::vector<Felt> RSCode::encode(std::span<const Felt> message) const {
  if (message.size() != k_)
    throw InvalidInput("message has " + std::to_string(message.size()) + " symbols, expected " + std::to_string(k_));
  return encode(Poly(std::vector<Felt>(message.begin(), message.end())));
}

std::vector<Felt> RSCode::encode(const Poly& message) const {
  if (message.degree() >= static_cast<int>(k_)) throw InvalidInput("message polynomial degree must be < k");
  std::vector<Felt> out(length());
  for (std::size_t j = 0; j < length(); ++j) out[j] = eval(field_, message, nodes_[j]);
  return out;
}

std::vector<Felt> default_defining_set(const Field& f, std::size_t n) {
  if (n > f.order())
    throw InvalidInput("code length " + std::to_string(n) + " exceeds field order " + std::to_string(f.order()));
  std::vector<Felt> nodes;
  nodes.reserve(n);
  if (n > 0) nodes.push_back(0);
  for (std::size_t e = 0; nodes.size() < n; ++e) nodes.push_back(f.exp(static_cast<std::int64_t>(e)));
  return nodes;
}

RSDecodeResult rs_decode(const RSCode& code, std::span<const Felt> received) {
  const Field& f = code.field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  const std::size_t t = code.error_radius();
  if (received.size() != n)
    throw InvalidInput("received word has " + std::to_string(received.size()) + " symbols, expected " +
                       std::to_string(n));
  for (Felt y : received)
    if (!f.contains(y)) throw InvalidInput("received symbol outside the field");

  // Unknowns: Q_0..Q_{t+k-1}, then E_0..E_{t-1}; E is monic of degree t.
  // Row j: Q(a_j) - y_j E_low(a_j) = y_j a_j^t.
  const std::size_t nq = t + k;
  const std::size_t unknowns = nq + t;
  Matrix sys(n, unknowns + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Felt a = code.nodes()[j];
    const Felt y = received[j];
    Felt p = 1;
    for (std::size_t c = 0; c < nq; ++c) {
      sys(j, c) = p;
      if (c < t) sys(j, nq + c) = f.neg(f.mul(y, p));
      p = f.mul(p, a);
    }
    sys(j, unknowns) = f.mul(y, f.pow(a, static_cast<std::int64_t>(t)));
  }
  const auto pivots = rref_in_place(f, sys);
  if (!pivots.empty() && pivots.back() == unknowns)
    throw DecodeFailure("no error locator of degree " + std::to_string(t) + " is consistent with the received word");

  // Free variables set to zero.
  std::vector<Felt> sol(unknowns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = sys(r, unknowns);
  Poly q(std::vector<Felt>(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(nq)));
  std::vector<Felt> e_coeffs(sol.begin() + static_cast<std::ptrdiff_t>(nq), sol.end());
  e_coeffs.push_back(1);
  Poly e(std::move(e_coeffs));

  auto [msg, rem] = divmod(f, q, e);
  if (!rem.is_zero() || msg.degree() >= static_cast<int>(k))
    throw DecodeFailure("error locator does not divide the interpolant; more than " + std::to_string(t) +
                        " errors");

  RSDecodeResult out{std::move(msg), {}};
  const auto cw = code.encode(out.message);
  for (std::size_t j = 0; j < n; ++j)
    if (cw[j] != received[j]) out.error_positions.push_back(j);
  if (out.error_positions.size() > t) throw DecodeFailure("decoded word lies outside the error radius");
  return out;
}

Poly rs_erasure_decode(const RSCode& code, std::span<const std::optional<Felt>> received) {
  const Field& f = code.field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (received.size() != n)
    throw InvalidInput("received word has " + std::to_string(received.size()) + " symbols, expected " +
                       std::to_string(n));
  std::vector<std::size_t> clean;
  for (std::size_t j = 0; j < n; ++j)
    if (received[j]) {
      if (!f.contains(*received[j])) throw InvalidInput("received symbol outside the field");
      clean.push_back(j);
    }
  if (clean.size() < k)
    throw DecodeFailure("only " + std::to_string(clean.size()) + " unerased symbols; need " + std::to_string(k));

  // Solve the k x k Vandermonde system on the first k clean positions.
  Matrix sys(k, k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    const Felt a = code.nodes()[clean[r]];
    Felt p = 1;
    for (std::size_t c = 0; c < k; ++c) {
      sys(r, c) = p;
      p = f.mul(p, a);
    }
    sys(r, k) = *received[clean[r]];
  }
  rref_in_place(f, sys);
  std::vector<Felt> coeffs(k);
  for (std::size_t r = 0; r < k; ++r) coeffs[r] = sys(r, k);
  Poly msg(std::move(coeffs));

  for (std::size_t idx = k; idx < clean.size(); ++idx) {
    const std::size_t j = clean[idx];
    if (eval(f, msg, code.nodes()[j]) != *received[j])
      throw DecodeFailure("unerased symbol " + std::to_string(j) + " is inconsistent; errors are present");
  }
  return msg;
}

}  // namespace ccodes
