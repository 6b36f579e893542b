#include <benchmark/benchmark.h>

#include "charsum/characters.hpp"
#include "charsum/class_number.hpp"
#include "charsum/dedekind.hpp"
#include "charsum/elma.hpp"
#include "charsum/equidistribution.hpp"
#include "charsum/frequency.hpp"
#include "charsum/lvalues.hpp"

using namespace charsum;

static void BM_ContextBuild(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PrimeContext::build(p));
}
BENCHMARK(BM_ContextBuild)->Arg(1009)->Arg(19997);

static void BM_PartialSumEnergy(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  const Character chi(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum_energy(chi));
}
BENCHMARK(BM_PartialSumEnergy)->Arg(1009)->Arg(19997);

static void BM_ASumDefinition(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a_sum_definition(ctx, 3));
}
BENCHMARK(BM_ASumDefinition)->Arg(1009)->Arg(19993);

static void BM_ASumOrthogonality(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a_sum_orthogonality(ctx, 3));
}
BENCHMARK(BM_ASumOrthogonality)->Arg(433)->Arg(1009);

static void BM_MeanSquare(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto ctx = PrimeContext::build(p);
  for (auto _ : state) benchmark::DoNotOptimize(mean_square(ctx, p - 1));
}
BENCHMARK(BM_MeanSquare)->Arg(1009)->Arg(4001);

static void BM_DedekindEuclid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(123457, 999983));
}
BENCHMARK(BM_DedekindEuclid);

static void BM_SigmaExact(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(figure_of_merit_sigma(ctx, 3));
}
BENCHMARK(BM_SigmaExact)->Arg(127)->Arg(1009);

static void BM_ExactDiscrepancy(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  const auto pts = lattice_point_set(ctx, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_discrepancy_2d(pts));
}
BENCHMARK(BM_ExactDiscrepancy)->Arg(31)->Arg(127);

static void BM_CharacterMaxima(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CharacterMaxima(ctx).max_nontrivial());
}
BENCHMARK(BM_CharacterMaxima)->Arg(401)->Arg(1999);

static void BM_RelativeClassNumber(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relative_class_number(ctx, 1));
}
BENCHMARK(BM_RelativeClassNumber)->Arg(59)->Arg(199);

BENCHMARK_MAIN();
