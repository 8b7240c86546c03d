#include <benchmark/benchmark.h>

#include "tensordim/builders.hpp"
#include "tensordim/dimension.hpp"

using namespace tensordim;

namespace {

void bm_dim_tensor_general(benchmark::State& state) {
  SpectralProfile a = build_fg_domain(static_cast<int>(state.range(0)));
  SpectralProfile b = build_fg_domain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dim_tensor_general(a, b));
  }
}
BENCHMARK(bm_dim_tensor_general)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMicrosecond);

void bm_validate_profile(benchmark::State& state) {
  SpectralProfile s = build_fg_domain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_profile(s));
  }
}
BENCHMARK(bm_validate_profile)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace
