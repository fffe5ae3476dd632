#include <benchmark/benchmark.h>

#include "hlgf/charge.hpp"
#include "hlgf/sweep.hpp"

namespace {

const char* complex_name(int64_t i) { return i == 0 ? "s2_five_vertex" : "s2_tetra"; }

void BM_BuildCoveringWord(benchmark::State& state) {
  const hlgf::SkeletalComplex c = hlgf::build_builtin(complex_name(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hlgf::covering_word(c));
}
BENCHMARK(BM_BuildCoveringWord)->Arg(0)->Arg(1);

void BM_ChargeByRoute(benchmark::State& state) {
  const hlgf::HLGF f =
      hlgf::random_field(hlgf::build_builtin("s2_five_vertex"), static_cast<hlgf::Backend>(state.range(1)), 1);
  const auto route = static_cast<hlgf::ChargeRoute>(state.range(0));
  for (auto _ : state) {
    switch (route) {
      case hlgf::ChargeRoute::kCoveringWord:
        benchmark::DoNotOptimize(hlgf::topological_charge(f));
        break;
      case hlgf::ChargeRoute::kFaceSum:
        benchmark::DoNotOptimize(hlgf::charge_face_sum(f));
        break;
      case hlgf::ChargeRoute::kTransitionWinding:
        benchmark::DoNotOptimize(hlgf::transition_winding(f, {1, 2, 3}));
        break;
    }
  }
  state.SetLabel(std::string(hlgf::route_name(route)) + "/" +
                 std::string(hlgf::backend_name(f.backend())));
}
BENCHMARK(BM_ChargeByRoute)->ArgsProduct({{0, 1, 2}, {0, 1}});

void BM_ConsistencyPentachoron(benchmark::State& state) {
  const hlgf::HLGF f = hlgf::random_field(hlgf::build_builtin("s3_pentachoron"), hlgf::Backend::kSO3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hlgf::check_consistency(f));
}
BENCHMARK(BM_ConsistencyPentachoron);

}  // namespace

BENCHMARK_MAIN();
