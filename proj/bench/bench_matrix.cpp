// Serial reference vs OpenMP column evaluation of operator matrices.

#include <benchmark/benchmark.h>

#include "k3fock/ops/operators.hpp"

namespace {

using namespace k3fock;

const fock::FockSpace& space() {
  static const fock::FockSpace s(taut::DivisorLattice::parse("0 1; 1 0"));
  return s;
}

ops::OpExpr pick(int which, int n) {
  const auto& r = space().ring();
  switch (which) {
    case 0: return ops::op_h_alpha_delta(r, r.parse("a1_1", 1), n);
    case 1: return ops::op_f_delta(r, n);
    default: return ops::op_mult_chern(r, 2, n);
  }
}

void BM_Serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto op = pick(static_cast<int>(state.range(0)), n);
  space().basis(n);
  for (auto _ : state) benchmark::DoNotOptimize(ops::matrix_of_serial(space(), op, n));
  state.counters["dim"] = space().basis(n)->size();
}

void BM_OpenMP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto op = pick(static_cast<int>(state.range(0)), n);
  space().basis(n);
  for (auto _ : state) benchmark::DoNotOptimize(ops::matrix_of(space(), op, n));
  state.counters["dim"] = space().basis(n)->size();
}

// Args: {operator (0 h_αδ, 1 f_δ, 2 ch_2), level}.
BENCHMARK(BM_Serial)->ArgsProduct({{0, 1, 2}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)->ArgsProduct({{0, 1, 2}, {2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
