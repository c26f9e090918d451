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

#include "qcut/clifford.hpp"

using namespace qcut;

static void BM_SampleClifford(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng = make_rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_uniform_clifford(k, rng));
  }
}
BENCHMARK(BM_SampleClifford)->Arg(1)->Arg(2)->Arg(3)->Arg(6)->Arg(12);

static void BM_TableauToUnitary(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng = make_rng(5);
  const CliffordTableau t = sample_uniform_clifford(k, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tableau_to_unitary(t));
  }
}
BENCHMARK(BM_TableauToUnitary)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_SampledSecondMoment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_2design(2, TwoDesignMode::Sampled, 1000, 7));
  }
}
BENCHMARK(BM_SampledSecondMoment);

BENCHMARK_MAIN();
