#include "ccodes/verify.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "ccodes/error.hpp"

namespace ccodes {

DistanceReport min_distance_exhaustive(const Field& f, const Matrix& generator, std::uint64_t guard) {
  const std::size_t s = generator.rows();
  const std::size_t n = generator.cols();
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s; ++i) {
    total *= q;
    if (total > guard)
      throw GuardExceeded("exhaustive distance needs q^s > " + std::to_string(guard) + " codewords");
  }

  // multiples[i][v] = v * row_i, so a digit change costs one subtract and one add.
  std::vector<Matrix> multiples(s, Matrix(q, n));
  for (std::size_t i = 0; i < s; ++i)
    for (Felt v = 0; v < q; ++v)
      for (std::size_t j = 0; j < n; ++j) multiples[i](v, j) = f.mul(v, generator(i, j));

  DistanceReport rep;
  rep.weight_histogram.assign(n + 1, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Felt> msg(s, 0);
  std::vector<Felt> cw(n, 0);

  // Scaling preserves weight, so only messages whose first nonzero symbol is
  // 1 are enumerated; each stands for q - 1 messages. Leading positions are
  // visited from last to first so messages come in lexicographic order and
  // the first minimum found is the smallest witness.
  for (std::size_t lead = s; lead-- > 0;) {
    std::fill(msg.begin(), msg.end(), 0);
    msg[lead] = 1;
    for (std::size_t j = 0; j < n; ++j) cw[j] = generator(lead, j);
    while (true) {
      std::size_t w = 0;
      for (auto c : cw) w += c != 0;
      rep.weight_histogram[w] += q - 1;
      if (w != 0 && w < best) {
        best = w;
        rep.witness_message = msg;
      }
      // Odometer over positions lead+1..s-1, last position fastest.
      bool advanced = false;
      for (std::size_t pos = s; pos > lead + 1 && !advanced;) {
        --pos;
        const Felt old = msg[pos];
        const Felt next = old + 1 == q ? 0 : old + 1;
        const auto before = multiples[pos].row(old);
        const auto after = multiples[pos].row(next);
        for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(f.sub(cw[j], before[j]), after[j]);
        msg[pos] = next;
        advanced = next != 0;
      }
      if (!advanced) break;
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) throw InvalidInput("generator matrix spans only the zero word");
  rep.distance = best;
  return rep;
}

std::vector<Felt> subcode_encode(const CodeSpec& spec, std::span<const Felt> message) {
  if (message.size() != spec.messages())
    throw InvalidInput("message has " + std::to_string(message.size()) + " symbols, expected " +
                       std::to_string(spec.messages()));
  for (Felt x : message)
    if (!spec.field.contains(x)) throw InvalidInput("message symbol outside the field");
  return vec_mul(spec.field, message, spec.generator);
}

namespace {

RSCode base_code(const CodeSpec& spec) {
  if (spec.defining_set.empty())
    throw InvalidInput("code has no Reed-Solomon defining set; it cannot be decoded");
  return RSCode(spec.field, spec.defining_set, spec.k);
}

}  // namespace

SubcodeDecoder::SubcodeDecoder(const CodeSpec& spec)
    : field_(spec.field), rs_(base_code(spec)), transform_(spec.transform) {
  const std::size_t s = transform_.rows();
  Matrix echelon = transform_;
  auto pivots = rref_in_place(field_, echelon);
  if (pivots.size() < s)
    throw InvalidInput("transform has rank " + std::to_string(pivots.size()) + " < s = " + std::to_string(s) +
                       "; decoding is ambiguous");
  pivot_cols_ = std::move(pivots);
  pivot_inverse_ = inverse(field_, transform_.select_columns(pivot_cols_));
}

std::vector<Felt> SubcodeDecoder::solve(std::span<const Felt> u) const {
  // m * T = u restricted to the pivot columns determines m; the remaining
  // columns check that u lies in the row space of T.
  std::vector<Felt> u_p(pivot_cols_.size());
  for (std::size_t c = 0; c < pivot_cols_.size(); ++c) u_p[c] = u[pivot_cols_[c]];
  auto m = vec_mul(field_, u_p, pivot_inverse_);
  if (vec_mul(field_, m, transform_) != std::vector<Felt>(u.begin(), u.end()))
    throw DecodeFailure("decoded Reed-Solomon word is not in the subcode");
  return m;
}

std::vector<Felt> SubcodeDecoder::decode(std::span<const Felt> received, std::span<const std::size_t> erasures) const {
  const std::size_t n = rs_.length();
  if (received.size() != n)
    throw InvalidInput("received word has " + std::to_string(received.size()) + " symbols, expected " +
                       std::to_string(n));
  Poly msg;
  if (erasures.empty()) {
    msg = rs_decode(rs_, received).message;
  } else {
    std::vector<std::optional<Felt>> marked(received.begin(), received.end());
    for (auto j : erasures) {
      if (j >= n) throw InvalidInput("erasure index " + std::to_string(j) + " out of range");
      marked[j].reset();
    }
    msg = rs_erasure_decode(rs_, marked);
  }
  return solve(msg.padded(rs_.dimension()));
}

std::vector<Felt> subcode_decode(const CodeSpec& spec, std::span<const Felt> received,
                                 std::span<const std::size_t> erasures) {
  return SubcodeDecoder(spec).decode(received, erasures);
}

FastReadResult systematic_fast_read(const CodeSpec& spec, std::span<const Felt> received) {
  if (!spec.matching) throw InvalidInput("fast read needs a systematic code");
  if (received.size() != spec.length())
    throw InvalidInput("received word has " + std::to_string(received.size()) + " symbols, expected " +
                       std::to_string(spec.length()));
  FastReadResult out;
  out.message.reserve(spec.messages());
  for (auto j : spec.matching->column) out.message.push_back(received[j]);
  const auto cw = subcode_encode(spec, out.message);
  out.clean = std::equal(cw.begin(), cw.end(), received.begin());
  return out;
}

}  // namespace ccodes

namespace ccodes {

VerifyReport verify_code(const CodeSpec& spec, const ConstraintGraph& g, std::uint64_t guard) {
  VerifyReport rep;
  rep.valid_pattern = validity_check(g, spec.generator);
  rep.rank_g = rank(spec.field, spec.generator);
  rep.rank_t = rank(spec.field, spec.transform);
  if (spec.matching && spec.matching->column.size() == spec.messages()) {
    rep.systematic = true;
    for (std::size_t i = 0; i < spec.messages() && rep.systematic; ++i) {
      const std::size_t j = spec.matching->column[i];
      if (j >= spec.length()) {
        rep.systematic = false;
        break;
      }
      for (std::size_t r = 0; r < spec.messages(); ++r)
        if (spec.generator(r, j) != (r == i ? 1u : 0u)) rep.systematic = false;
    }
  }
  rep.distance = min_distance_exhaustive(spec, guard);
  return rep;
}

}  // namespace ccodes
