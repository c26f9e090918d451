// Copyright 2026 The qcut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qcut/rng.hpp"
#include "qcut/statevector.hpp"

using namespace qcut;

static void BM_SingleQubitGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Statevector sv(n);
  const Gate h{GateKind::H, 0.0, {n / 2}};
  for (auto _ : state) {
    sv.apply_gate(h);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_SingleQubitGate)->Arg(8)->Arg(12)->Arg(16);

static void BM_RzzGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Statevector sv(n);
  const Gate rzz{GateKind::RZZ, 0.7, {0, n - 1}};
  for (auto _ : state) {
    sv.apply_gate(rzz);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_RzzGate)->Arg(8)->Arg(12)->Arg(16);

static void BM_CnotGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Statevector sv(n);
  const Gate cnot{GateKind::CNOT, 0.0, {0, n - 1}};
  for (auto _ : state) {
    sv.apply_gate(cnot);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_CnotGate)->Arg(8)->Arg(12)->Arg(16);

static void BM_DenseTwoWireUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Statevector sv(n);
  Matrix u = Matrix::Identity(4, 4);
  const int wires[2] = {0, n - 1};
  for (auto _ : state) {
    sv.apply_unitary(u, wires);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
}
BENCHMARK(BM_DenseTwoWireUnitary)->Arg(8)->Arg(12);

static void BM_MeasureCollapse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = make_rng(1);
  const int wires[1] = {n / 2};
  for (auto _ : state) {
    state.PauseTiming();
    Statevector sv(n);
    for (int q = 0; q < n; ++q) sv.apply_gate(Gate{GateKind::H, 0.0, {q}});
    state.ResumeTiming();
    benchmark::DoNotOptimize(sv.measure_collapse(wires, rng));
  }
}
BENCHMARK(BM_MeasureCollapse)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
