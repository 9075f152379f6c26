// Serial reference kernels against their OpenMP counterparts on the
// workloads that dominate the experiments.

#include <benchmark/benchmark.h>

#include "hyperorth/cfuncs.hpp"
#include "hyperorth/innerproduct.hpp"
#include "hyperorth/kernels.hpp"

namespace {

using namespace hyperorth;

CSpec sample_spec() {
  return CSpec(Koornwinder{Rational(1, 2), Rational(1, 3), {Rational(1, 2), Rational(-1, 3), Rational(1, 4), Rational(-1, 5)}});
}

ScaledLaurent pair_factor(int order, std::vector<int> direction) {
  return ScaledLaurent::from(LaurentPoly::along(2, direction, -(order + 2), root_factor(sample_spec(), 0, order)));
}

void BM_MultiplyScaled(benchmark::State& state, bool parallel) {
  const int order = static_cast<int>(state.range(0));
  const ScaledLaurent a = pair_factor(order, {1, 1});
  const ScaledLaurent b = pair_factor(order, {1, -1});
  for (auto _ : state) {
    auto r = parallel ? kernels::multiply_scaled_parallel(a, b) : kernels::multiply_scaled_serial(a, b);
    benchmark::DoNotOptimize(r);
  }
}

void BM_Multiply(benchmark::State& state, bool parallel) {
  const int order = static_cast<int>(state.range(0));
  const LaurentPoly a = pair_factor(order, {1, 1}).to_laurent();
  const LaurentPoly b = pair_factor(order, {1, -1}).to_laurent();
  for (auto _ : state) {
    auto r = parallel ? kernels::multiply_parallel(a, b) : kernels::multiply_serial(a, b);
    benchmark::DoNotOptimize(r);
  }
}

void BM_Gram(benchmark::State& state, bool parallel) {
  const int top = static_cast<int>(state.range(0));
  static const DeltaApprox delta = build_delta(sample_spec(), 2, 20);
  const auto basis = weights_below(Weight({top, top / 2}));
  for (auto _ : state) {
    auto g = parallel ? kernels::gram_parallel(basis, basis, delta.index())
                      : kernels::gram_serial(basis, basis, delta.index());
    benchmark::DoNotOptimize(g);
  }
}

void BM_GramApply(benchmark::State& state, bool parallel) {
  const int top = static_cast<int>(state.range(0));
  static const DeltaApprox delta = build_delta(sample_spec(), 2, 20);
  const auto basis = weights_below(Weight({top, top / 2}));
  std::vector<Integer> x(basis.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<long>(i) - 7;
  for (auto _ : state) {
    auto y = parallel ? kernels::gram_apply_parallel(basis, basis, x, delta.index())
                      : kernels::gram_apply_serial(basis, basis, x, delta.index());
    benchmark::DoNotOptimize(y);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_MultiplyScaled, serial, false)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MultiplyScaled, parallel, true)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Multiply, serial, false)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Multiply, parallel, true)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Gram, serial, false)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Gram, parallel, true)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GramApply, serial, false)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GramApply, parallel, true)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
