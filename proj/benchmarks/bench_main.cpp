#include <benchmark/benchmark.h>

#include <random>

#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/rs.hpp"
#include "ccodes/verify.hpp"

using namespace ccodes;

namespace {

ConstraintGraph banded(std::size_t s, std::size_t n, std::size_t width) {
  std::vector<std::vector<int>> rows(s, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t w = 0; w < width; ++w) rows[i][(i + w) % n] = 1;
  for (std::size_t j = 0; j < n; ++j) rows[j % s][j] = 1;
  return ConstraintGraph::from_rows(rows);
}

void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::make(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Felt> xs(1024);
  for (auto& x : xs) x = rng() % f.order();
  Felt acc = 1;
  for (auto _ : state) {
    for (auto x : xs) acc = f.mul(acc ^ x, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16);

void BM_KsysExact(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto g = banded(s, 2 * s, s);
  for (auto _ : state) benchmark::DoNotOptimize(k_sys_search(g, SearchMode::exact).k_sys);
}
BENCHMARK(BM_KsysExact)->DenseRange(4, 12, 4);

void BM_DminBound(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto g = banded(s, s + 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(d_min_bound(g).d_min);
}
BENCHMARK(BM_DminBound)->DenseRange(8, 20, 4);

void BM_ExhaustiveDistance(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto g = banded(s, 10, 6);
  const auto spec = construct(g, Mode::systematic_dsys);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_exhaustive(spec).distance);
}
BENCHMARK(BM_ExhaustiveDistance)->DenseRange(3, 6, 1);

void BM_RsDecode(benchmark::State& state) {
  const auto f = Field::make(2, 8);
  const std::size_t n = 255;
  const auto k = static_cast<std::size_t>(state.range(0));
  const RSCode code(f, default_defining_set(f, n), k);
  std::mt19937 rng(2);
  std::vector<Felt> msg(k);
  for (auto& x : msg) x = rng() % 256;
  auto r = code.encode(msg);
  for (std::size_t e = 0; e < code.error_radius(); ++e) r[(e * 37) % n] ^= 1 + e % 255;
  for (auto _ : state) benchmark::DoNotOptimize(rs_decode(code, r).message.degree());
}
BENCHMARK(BM_RsDecode)->Arg(223)->Arg(239);

void BM_SubcodeDecode(benchmark::State& state) {
  const auto g = banded(4, 10, 6);
  const auto spec = construct(g, Mode::systematic_dsys);
  const SubcodeDecoder dec(spec);
  auto r = subcode_encode(spec, std::vector<Felt>{1, 2, 3, 4});
  r[0] = spec.field.add(r[0], 1);
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(r).front());
}
BENCHMARK(BM_SubcodeDecode);

}  // namespace
BENCHMARK_MAIN();
