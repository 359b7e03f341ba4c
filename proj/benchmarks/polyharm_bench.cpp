#include <benchmark/benchmark.h>

#include <random>

#include "polyharm/almansi.hpp"
#include "polyharm/dirichlet.hpp"
#include "polyharm/manufactured.hpp"

using namespace polyharm;

static void BM_UnitSphereRule(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(unit_sphere_rule(n, order));
}
BENCHMARK(BM_UnitSphereRule)->Args({2, 256})->Args({3, 32})->Args({3, 128})->Args({4, 16});

static void BM_SolveInteriorPerPoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const int order = static_cast<int>(state.range(2));
  std::mt19937_64 gen(1);
  const auto spec = ProblemSpec::unit(n, p, order);
  const auto rule = make_rule(spec);
  const MultiPoly u = almansi_compose(random_harmonic_stack(n, p, 4, gen));
  const auto data = rotated_traces(FieldFunction::from_poly(u), spec);
  std::vector<double> base(n, 0.0);
  base[0] = 0.5;
  const std::vector<RotatedPoint> pts{RotatedPoint(0.3, base)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_interior(spec, rule, data, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(rule.size()) * p);
}
BENCHMARK(BM_SolveInteriorPerPoint)->Args({2, 1, 256})->Args({2, 3, 256})->Args({3, 2, 64})->Args({3, 2, 128});

static void BM_SolveInteriorThreads(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const auto spec = ProblemSpec::unit(3, 2, 32);
  const auto rule = make_rule(spec);
  const MultiPoly u = almansi_compose(random_harmonic_stack(3, 2, 4, gen));
  const auto data = rotated_traces(FieldFunction::from_poly(u), spec);
  std::vector<RotatedPoint> pts;
  std::uniform_real_distribution<double> c(-0.5, 0.5);
  for (int i = 0; i < 256; ++i) pts.push_back(RotatedPoint::real({c(gen), c(gen), c(gen)}));
  SolveOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_interior(spec, rule, data, pts, options));
}
BENCHMARK(BM_SolveInteriorThreads)->Arg(1)->Arg(4)->UseRealTime();

static void BM_AlmansiDecompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  std::mt19937_64 gen(3);
  const MultiPoly u = almansi_compose(random_harmonic_stack(n, p, 6, gen));
  for (auto _ : state) benchmark::DoNotOptimize(almansi_decompose(u, p));
}
BENCHMARK(BM_AlmansiDecompose)->Args({2, 2})->Args({3, 4});

BENCHMARK_MAIN();
