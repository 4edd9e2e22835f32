#include <benchmark/benchmark.h>

#include <ncnull/sampler.hpp>

using namespace ncnull;

static void BM_HaarUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(n, seed++));
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(4, 64);

static void BM_XgnPoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xgn_point(2, n, seed++));
}
BENCHMARK(BM_XgnPoint)->RangeMultiplier(2)->Range(4, 32);

static void BM_FalsifyMemberOnUnitaries(benchmark::State& state) {
  const auto alpha = Alphabet::standard(2, true);
  const NcPoly f = parse_polynomial("X2 (1 - X1^* X1) X2^* + X1 X1^* - 1 + X2^* (1 - X1 X1^*)", alpha);
  FalsifyOptions o;
  o.max_size = 6;
  o.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(falsify(f, {DomainKind::unitaries, 2}, o));
}
BENCHMARK(BM_FalsifyMemberOnUnitaries);

static void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(1);
  const MatrixFloat g = gaussian_matrix(n, n, rng);
  const MatrixFloat h = g + g.conjugate_transpose();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(4, 32);
