#include <benchmark/benchmark.h>

#include <ncnull/realization.hpp>

using namespace ncnull;

namespace {

BasePointPtr unit_pair() {
  static const BasePointPtr b =
      BasePoint::make(Alphabet::standard(2, false), {MatrixExact::unit(2, 0, 1), MatrixExact::unit(2, 1, 0)});
  return b;
}

// Nested inverse of depth k: (1 + X1 (1 + X2 (...)^-1)^-1)^-1 style chains.
RatExpr chain(const AlphabetPtr& a, int depth) {
  std::string s = "X1";
  for (int i = 0; i < depth; ++i) s = "(X" + std::to_string(1 + i % 2) + " + 2 (" + s + ")^-1)";
  return parse_expression(s, a);
}

}  // namespace

static void BM_CompileCommutatorInverse(benchmark::State& state) {
  const RatExpr e = parse_expression("(X1 X2 - X2 X1)^-1", unit_pair()->alphabet());
  for (auto _ : state) benchmark::DoNotOptimize(compile(e, unit_pair()));
}
BENCHMARK(BM_CompileCommutatorInverse);

static void BM_IsZeroIdentity(benchmark::State& state) {
  const auto a = Alphabet::standard(2, false);
  const auto base = BasePoint::make(a, {MatrixExact{{Scalar(1)}}, MatrixExact{{Scalar(2)}}});
  const RatExpr e = chain(a, static_cast<int>(state.range(0)));
  const LinRep s = compile(RatExpr::sub(e, e), base);
  for (auto _ : state) benchmark::DoNotOptimize(is_zero(s));
  state.counters["dimension"] = static_cast<double>(s.dimension());
}
BENCHMARK(BM_IsZeroIdentity)->DenseRange(1, 5);

static void BM_MinimizeScalar(benchmark::State& state) {
  const auto a = Alphabet::standard(2, false);
  const auto base = BasePoint::make(a, {MatrixExact{{Scalar(1)}}, MatrixExact{{Scalar(2)}}});
  const LinRep s = compile(chain(a, static_cast<int>(state.range(0))), base);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_scalar(s));
}
BENCHMARK(BM_MinimizeScalar)->DenseRange(1, 5);
