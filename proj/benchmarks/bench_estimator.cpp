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

#include "qcut/cutting.hpp"
#include "qcut/qaoa.hpp"

using namespace qcut;

namespace {

struct Fixture {
  Graph graph;
  EdgePartition partition;
  Circuit circuit;
  DiagonalObservable obs;

  Fixture(int p) {
    ClusteredGraphSpec spec;
    spec.clusters = 2;
    spec.cluster_size = 4;
    spec.separator_size = 1;
    spec.seed = 7;
    graph = generate_clustered_graph(spec);
    partition = chain_partition(graph);
    QAOAParams params;
    for (int l = 0; l < p; ++l) {
      params.gammas.push_back(0.4 + 0.1 * l);
      params.betas.push_back(0.3 + 0.2 * l);
    }
    circuit = build_qaoa_circuit(graph, params, &partition);
    obs = maxcut_cost_operator(graph);
  }
};

}  // namespace

static void BM_EstimateShots(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const CutMethod method =
      state.range(1) == 0 ? CutMethod::Randomized : CutMethod::Pauli;
  Fixture f(p);
  const CutPlan plan = plan_qaoa_cuts(f.graph, f.partition, p, method);
  ShotOptions opt;
  opt.shots = 2000;
  opt.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(f.circuit, plan, f.obs, opt));
  }
  state.SetItemsProcessed(state.iterations() * opt.shots);
  state.SetLabel(cut_method_name(method) + ", 9 qubits");
}
BENCHMARK(BM_EstimateShots)
    ->Args({1, 0})
    ->Args({1, 1})
    ->Args({2, 0})
    ->Args({2, 1});

static void BM_SampleCut(benchmark::State& state) {
  Fixture f(1);
  const CutPlan plan =
      plan_qaoa_cuts(f.graph, f.partition, 1, CutMethod::Randomized);
  ShotOptions opt;
  opt.shots = 2000;
  opt.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_cut(f.circuit, plan, opt));
  }
  state.SetItemsProcessed(state.iterations() * opt.shots);
}
BENCHMARK(BM_SampleCut);

static void BM_ExactCutExpectation(benchmark::State& state) {
  Fixture f(2);
  const CutPlan plan =
      plan_qaoa_cuts(f.graph, f.partition, 2, CutMethod::Randomized);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_cut_expectation(f.circuit, plan, f.obs));
  }
}
BENCHMARK(BM_ExactCutExpectation);

BENCHMARK_MAIN();
