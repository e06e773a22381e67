#include <benchmark/benchmark.h>

#include "twistlab/characters.hpp"
#include "twistlab/coinvariants.hpp"
#include "twistlab/element_syntax.hpp"
#include "twistlab/restricted.hpp"
#include "twistlab/torus_hopf.hpp"

using namespace twistlab;

static void BM_CycloMul(benchmark::State& state) {
  const auto ctx = CycloContext::get(static_cast<int>(state.range(0)));
  auto z = CycloScalar::root_of_unity(ctx, 1) + CycloScalar(ctx, Rational(3, 7));
  const auto w = CycloScalar::root_of_unity(ctx, 3) - CycloScalar(ctx, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(z * w);
}
BENCHMARK(BM_CycloMul)->Arg(4)->Arg(12);

static void BM_EnumerateGroup(benchmark::State& state) {
  const auto spec = reflection_group(4, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(spec));
}
BENCHMARK(BM_EnumerateGroup)->Arg(2)->Arg(3)->Arg(4);

static void BM_CocycleF(benchmark::State& state) {
  const auto ctx = CycloContext::get(2);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_F(ctx, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CocycleF)->Arg(2)->Arg(4);

static void BM_CherednikMul(benchmark::State& state) {
  const auto ctx = CycloContext::get(2);
  const auto spec = mystic_group(2, 2, 3);
  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::braided, 1, Rational(1), {}));
  const auto a = parse_element(H, "y1*y2*y3");
  const auto b = parse_element(H, "x1*x2*x3");
  for (auto _ : state) benchmark::DoNotOptimize(H.mul(a, b));
}
BENCHMARK(BM_CherednikMul);

static void BM_CoinvariantQuotient(benchmark::State& state) {
  const auto ctx = CycloContext::get(2);
  const auto spec = mystic_group(2, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coinvariant_quotient(ctx, spec).total_dim());
}
BENCHMARK(BM_CoinvariantQuotient)->Arg(2)->Arg(3);

static void BM_BnCharacterTable(benchmark::State& state) {
  const auto ctx = CycloContext::get(4);
  for (auto _ : state) benchmark::DoNotOptimize(bn_character_table(ctx, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_BnCharacterTable)->Arg(2)->Arg(3);

static void BM_RestrictedCenter(benchmark::State& state) {
  const auto ctx = CycloContext::get(2);
  for (auto _ : state) {
    RestrictedAlgebra R(ctx, reflection_group(2, 2, 2), make_params(ctx, reflection_group(2, 2, 2),
                                                                      CherednikFlavor::rational, 0, Rational(1), {}));
    benchmark::DoNotOptimize(center(R.algebra(), R.generators()).size());
  }
}
BENCHMARK(BM_RestrictedCenter)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
