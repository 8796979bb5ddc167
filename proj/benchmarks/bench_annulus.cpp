#include <random>

#include <benchmark/benchmark.h>

#include "zero_annulus/bounds.hpp"
#include "zero_annulus/families.hpp"
#include "zero_annulus/genfib.hpp"
#include "zero_annulus/roots.hpp"
#include "zero_annulus/tuner.hpp"

using namespace zero_annulus;

namespace {

Polynomial sample(unsigned degree) {
  std::mt19937_64 rng(degree);
  return random_polynomial(Family::uniform, degree, rng);
}

void BM_CauchyRadius(benchmark::State& state) {
  const auto poly = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_radius(poly));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyRadius)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_GeneralAnnulus(benchmark::State& state) {
  const auto poly = sample(static_cast<unsigned>(state.range(0)));
  const FibParams outer{0.5, 1.0, 0.375}, inner{2.0, 3.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(general_annulus(poly, outer, inner));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralAnnulus)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

// The tuner's inner loop: polynomial-dependent work cached once.
void BM_EvaluatorOuterRadius(benchmark::State& state) {
  const AnnulusEvaluator evaluator(sample(static_cast<unsigned>(state.range(0))));
  const FibParams params{0.5, 1.0, 0.375};
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.outer_radius(params));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluatorOuterRadius)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_FindRoots(benchmark::State& state) {
  const auto poly = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(poly));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(4, 256)->Unit(benchmark::kMicrosecond);

void BM_TuneAnnulus(benchmark::State& state) {
  const auto poly = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tune_annulus(poly));
}
BENCHMARK(BM_TuneAnnulus)->Arg(3)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_IdentityExact(benchmark::State& state) {
  const ExactFibParams params{ExactScalar(1, 2), 1, ExactScalar(3, 8)};
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemma_identity_residual(params, n));
}
BENCHMARK(BM_IdentityExact)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_Binomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binomial(n, n / 2));
}
BENCHMARK(BM_Binomial)->RangeMultiplier(8)->Range(8, 8192);

}  // namespace

BENCHMARK_MAIN();
