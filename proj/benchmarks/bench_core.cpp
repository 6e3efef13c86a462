#include <benchmark/benchmark.h>

#include <random>

#include "hindman/divprop.hpp"
#include "hindman/fip.hpp"
#include "hindman/intset.hpp"
#include "hindman/largeness.hpp"
#include "hindman/tree.hpp"

using namespace hindman;

namespace {

IntSet random_set(Universe u, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  return IntSet::from_predicate(u, [&](std::size_t) { return coin(rng); });
}

Coloring random_coloring(std::size_t n, std::size_t r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> colors(n - 1);
  for (auto& c : colors) c = rng() % r;
  return Coloring(n, r, std::move(colors));
}

void BM_ShiftIntersect(benchmark::State& state) {
  const Universe u(static_cast<std::size_t>(state.range(0)));
  const IntSet a = random_set(u, 1, 0.5);
  std::size_t n = 1;
  for (auto _ : state) {
    IntSet x = a & shift(a, n);
    benchmark::DoNotOptimize(x);
    n = n % 63 + 1;
  }
}
BENCHMARK(BM_ShiftIntersect)->Arg(256)->Arg(2000)->Arg(1 << 16);

void BM_SyndeticHolds(benchmark::State& state) {
  const Universe u(static_cast<std::size_t>(state.range(0)));
  const IntSet a = random_set(u, 2, 0.35);
  const DivProp p = DivProp::syndetic(4, 32);
  for (auto _ : state) benchmark::DoNotOptimize(p.holds(a));
}
BENCHMARK(BM_SyndeticHolds)->Arg(256)->Arg(2000)->Arg(1 << 16);

void BM_BanachHolds(benchmark::State& state) {
  const Universe u(static_cast<std::size_t>(state.range(0)));
  const IntSet a = random_set(u, 3, 0.4);
  const DivProp p = DivProp::banach(Rational::make(1, 2), 16);
  for (auto _ : state) benchmark::DoNotOptimize(p.holds(a));
}
BENCHMARK(BM_BanachHolds)->Arg(256)->Arg(2000);

void BM_ExactTreeSearch(benchmark::State& state) {
  const Coloring c = random_coloring(2000, 3, 9);
  const DivProp p = DivProp::syndetic(4, 32);
  for (auto _ : state) benchmark::DoNotOptimize(tree_exists(c, p, 3));
}
BENCHMARK(BM_ExactTreeSearch)->Unit(benchmark::kMillisecond);

void BM_ExactTreeMonochromatic(benchmark::State& state) {
  const Coloring c = Coloring::monochromatic(static_cast<std::size_t>(state.range(0)));
  const DivProp p = DivProp::infinite(2);
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(c, p, 3, SearchMode::Exact));
}
BENCHMARK(BM_ExactTreeMonochromatic)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SemigroupClosure(benchmark::State& state) {
  const Universe u(128);
  const SetFamily f(u, {IntSet::from_predicate(u, [](std::size_t i) { return i % 3 == 0; })});
  const DivProp p = DivProp::infinite(4);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_closure(f, p, 256));
}
BENCHMARK(BM_SemigroupClosure);

void BM_IsLarge(benchmark::State& state) {
  const Universe u(64);
  const IntSet evens = IntSet::from_predicate(u, [](std::size_t i) { return i % 2 == 0; });
  const DivProp p = DivProp::infinite(5);
  LargenessConfig cfg;
  cfg.depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_large(evens, SetFamily::trivial(u), p, cfg));
}
BENCHMARK(BM_IsLarge)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
