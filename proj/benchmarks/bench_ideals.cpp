#include <benchmark/benchmark.h>

#include <ncnull/ideals.hpp>
#include <ncnull/positivity.hpp>

using namespace ncnull;

static void BM_MembershipRandomElement(benchmark::State& state) {
  const auto kind = static_cast<IdealKind>(state.range(0));
  const RRIdeal I = builtin_ideal(kind, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const NcPoly f = random_ideal_element(I, seed++);
    benchmark::DoNotOptimize(is_member(f, I));
  }
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_MembershipRandomElement)
    ->Arg(static_cast<int>(IdealKind::Tprime))
    ->Arg(static_cast<int>(IdealKind::Sprime))
    ->Arg(static_cast<int>(IdealKind::CommInv))
    ->Arg(static_cast<int>(IdealKind::T))
    ->Arg(static_cast<int>(IdealKind::S))
    ->Arg(static_cast<int>(IdealKind::U));

static void BM_WitnessSearchSpherical(benchmark::State& state) {
  const RRIdeal S = builtin_ideal(IdealKind::S, 2);
  const NcPoly f = parse_polynomial("X1 X1^* + X2 X2^* - 1", S.alphabet());
  MembershipOptions o;
  o.find_witness = true;
  for (auto _ : state) benchmark::DoNotOptimize(is_member(f, S, o));
}
BENCHMARK(BM_WitnessSearchSpherical);

static void BM_GramConstraints(benchmark::State& state) {
  const auto alpha = Alphabet::standard(2, true);
  const NcPoly f = parse_polynomial("(1 - X1 X2)^* (1 - X1 X2) + (X2 - X1^*)^* (X2 - X1^*)", alpha);
  for (auto _ : state) benchmark::DoNotOptimize(gram_constraints(f, static_cast<std::size_t>(state.range(0)), NcPoly(alpha)));
}
BENCHMARK(BM_GramConstraints)->Arg(2)->Arg(3);
