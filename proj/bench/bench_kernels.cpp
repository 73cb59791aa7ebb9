#include <benchmark/benchmark.h>

#include "cofreyd/comodule.hpp"

using namespace cofreyd;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_CoalgebraDefects(benchmark::State& state) {
  const Coalgebra c = matrix2_coalgebra(incidence_chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), exec_of(state)));
  state.counters["dim"] = static_cast<double>(c.dim());
}

void BM_ComoduleDefects(benchmark::State& state) {
  const auto c = std::make_shared<const Coalgebra>(incidence_chain(static_cast<std::size_t>(state.range(0))));
  const auto reg = regular_comodule(c, Side::Right);
  const ActionList a = reg->sparse_actions();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        comodule_defect_flags(a, reg->dim(), c->delta(), c->epsilon(), false, c->field(), exec_of(state)));
  state.counters["dim"] = static_cast<double>(c->dim());
}

void BM_TraceGram(benchmark::State& state) {
  const MultTable t = dual_algebra(incidence_chain(static_cast<std::size_t>(state.range(0)), Field::prime(1009)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_gram(t, exec_of(state)));
  state.counters["dim"] = static_cast<double>(t.dim());
}

}  // namespace

BENCHMARK(BM_CoalgebraDefects)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComoduleDefects)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceGram)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
