#include <random>

#include <benchmark/benchmark.h>

#include "frobgen/galois.hpp"
#include "frobgen/generators.hpp"

using namespace frobgen;

static void BM_FieldMul(benchmark::State& state) {
  const auto f = gf::default_field(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(7);
  auto a = gf::random_like(f.zero(), rng);
  const auto b = gf::random_like(f.one(), rng);
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Args({5, 2})->Args({2, 8})->Args({101, 3});

static void BM_MultivariateGcd(benchmark::State& state) {
  const sym::Ring ring(5, {"s", "t"});
  std::mt19937_64 rng(11);
  const auto common = sym::random_poly(ring, rng, 3, 4);
  const auto f = common * sym::random_poly(ring, rng, static_cast<unsigned>(state.range(0)), 5);
  const auto g = common * sym::random_poly(ring, rng, static_cast<unsigned>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sym::gcd(f, g));
}
BENCHMARK(BM_MultivariateGcd)->Arg(3)->Arg(6)->Arg(10);

static void BM_C8Pipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cyclic2_generic_poly(5, 3));
}
BENCHMARK(BM_C8Pipeline)->Unit(benchmark::kMillisecond);

static void BM_RootSpace(benchmark::State& state) {
  const sym::Ring ring(5, {"s", "t"});
  const auto f = parse_linearized(c8f5_printed_polynomial(), ring, FrobeniusQ{1});
  const auto f5 = gf::default_field(5, 1);
  const auto g = specialize(f, {{"s", f5.from_int(1)}, {"t", f5.from_int(2)}}, f5);
  for (auto _ : state) benchmark::DoNotOptimize(root_space(g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_RootSpace)->Arg(2)->Arg(4)->Arg(8);

static void BM_ModuleSplittingDegree(benchmark::State& state) {
  const auto f = gf::default_field(3, 1);
  std::mt19937_64 rng(13);
  FiniteMatrix a(3, 3, f.zero());
  do {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = gf::random_like(f.zero(), rng);
    }
  } while (det(a).is_zero());
  const auto m = FiniteModule::make(a, FrobeniusQ{1});
  for (auto _ : state) benchmark::DoNotOptimize(module_splitting_degree(m, kSplittingDegreeCeiling));
}
BENCHMARK(BM_ModuleSplittingDegree);

BENCHMARK_MAIN();
