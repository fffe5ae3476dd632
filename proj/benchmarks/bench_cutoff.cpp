#include <benchmark/benchmark.h>

#include "hlgf/continuum.hpp"

namespace {

void BM_CutoffRoundSphere(benchmark::State& state) {
  const hlgf::SkeletalComplex c = hlgf::build_builtin("s2_five_vertex");
  const auto oracle = hlgf::oracle_round_sphere();
  hlgf::CutoffOptions options;
  options.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlgf::cutoff(*oracle, c, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CutoffRoundSphere)->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CutoffMonopole(benchmark::State& state) {
  const hlgf::SkeletalComplex c = hlgf::build_builtin("s2_tetra");
  const auto oracle = hlgf::oracle_monopole(3);
  hlgf::CutoffOptions options;
  options.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlgf::cutoff(*oracle, c, options));
}
BENCHMARK(BM_CutoffMonopole)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_CutoffPentachoron(benchmark::State& state) {
  const hlgf::SkeletalComplex c = hlgf::build_builtin("s3_pentachoron");
  const auto oracle = hlgf::oracle_linear_potential(
      {{{0, 0.7, -0.2, 0.4}, {-0.7, 0, 0.5, 0.1}, {0.2, -0.5, 0, 0.9}, {-0.4, -0.1, -0.9, 0}}});
  hlgf::CutoffOptions options;
  options.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlgf::cutoff(*oracle, c, options));
}
BENCHMARK(BM_CutoffPentachoron)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
