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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "qcut/config.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/statevector.hpp"

using namespace qcut;

namespace {

Graph single_edge_graph() {
  Graph g;
  g.num_vertices = 2;
  g.edges = {{0, 1}};
  g.labels = {"cluster:0", "cluster:1"};
  return g;
}

Graph triangle_graph() {
  Graph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {0, 2}, {1, 2}};
  g.labels = {"", "", ""};
  return g;
}

}  // namespace

TEST_CASE("clustered graphs have the prescribed vertex counts") {
  ClusteredGraphSpec big;
  big.clusters = 3;
  big.cluster_size = 20;
  big.separator_size = 1;
  big.seed = 7;
  CHECK(generate_clustered_graph(big).num_vertices == 62);

  ClusteredGraphSpec huge;
  huge.clusters = 5;
  huge.cluster_size = 25;
  huge.separator_size = 1;
  huge.seed = 7;
  CHECK(generate_clustered_graph(huge).num_vertices == 129);

  ClusteredGraphSpec tiny;
  tiny.clusters = 2;
  tiny.cluster_size = 1;
  tiny.separator_size = 1;
  tiny.seed = 3;
  const Graph g = generate_clustered_graph(tiny);
  CHECK(g.num_vertices == 3);
  CHECK(g.is_connected());
}

TEST_CASE("generated labels and edge structure follow the family rules") {
  ClusteredGraphSpec spec;
  spec.clusters = 3;
  spec.cluster_size = 4;
  spec.separator_size = 2;
  spec.seed = 19;
  const Graph g = generate_clustered_graph(spec);
  CHECK(g.num_vertices == 3 * 4 + 2 * 2);
  CHECK(g.is_connected());

  auto cluster_of = [&](int v) -> int {
    if (g.labels[v].rfind("cluster:", 0) == 0)
      return std::stoi(g.labels[v].substr(8));
    return -1;
  };
  auto sep_of = [&](int v) -> int {
    if (g.labels[v].rfind("sep:", 0) == 0)
      return std::stoi(g.labels[v].substr(4));
    return -1;
  };
  for (auto [u, v] : g.edges) {
    const int cu = cluster_of(u), cv = cluster_of(v);
    const int su = sep_of(u), sv = sep_of(v);
    if (cu >= 0 && cv >= 0) {
      CHECK(cu == cv);  // no cross-cluster edges
    } else if (su >= 0 && sv >= 0) {
      FAIL("separator-separator edge present");
    } else {
      const int c = std::max(cu, cv), s = std::max(su, sv);
      CHECK((s == c || s == c - 1));  // separators touch adjacent clusters only
    }
  }

  // Same seed, same bytes.
  const Graph again = generate_clustered_graph(spec);
  CHECK(graph_to_json(again) == graph_to_json(g));
}

TEST_CASE("maxcut cost operator matches hand values on the triangle") {
  const Graph g = triangle_graph();
  const DiagonalObservable obs = maxcut_cost_operator(g);
  CHECK(obs.evaluate(0b000) == doctest::Approx(1.0));
  CHECK(obs.evaluate(0b001) == doctest::Approx(-1.0 / 3.0));
  check_observable_range(obs, 3);
}

TEST_CASE("single edge reaches cost -1 at its minimum") {
  const Graph g = single_edge_graph();
  const DiagonalObservable obs = maxcut_cost_operator(g);
  double best = 1.0;
  for (std::uint64_t x = 0; x < 4; ++x) best = std::min(best, obs.evaluate(x));
  CHECK(best == doctest::Approx(-1.0));
}

TEST_CASE("flat parameters give zero expected cost") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 11;
  const Graph g = generate_clustered_graph(spec);
  QAOAParams params;
  params.gammas = {0.0};
  params.betas = {0.0};
  CHECK(std::abs(exact_expectation(build_qaoa_circuit(g, params),
                                   maxcut_cost_operator(g))) < 1e-12);
}

TEST_CASE("partition-respecting edge orders leave the cost unchanged") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 3;
  spec.separator_size = 1;
  spec.seed = 23;
  const Graph g = generate_clustered_graph(spec);
  QAOAParams params;
  params.gammas = {0.6, 0.2};
  params.betas = {0.4, 0.8};
  const DiagonalObservable obs = maxcut_cost_operator(g);

  const double natural = exact_expectation(build_qaoa_circuit(g, params), obs);
  EdgePartition part = chain_partition(g);
  const double ordered =
      exact_expectation(build_qaoa_circuit(g, params, &part), obs);
  // Reverse edges inside each subset: still partition-respecting.
  for (auto& es : part.edge_sets) std::reverse(es.begin(), es.end());
  const double reversed =
      exact_expectation(build_qaoa_circuit(g, params, &part), obs);
  CHECK(std::abs(natural - ordered) < 1e-10);
  CHECK(std::abs(ordered - reversed) < 1e-10);
}

TEST_CASE("grid-optimal single-edge qaoa solves the instance exactly") {
  const Graph g = single_edge_graph();
  const GridSearchResult grid = grid_search_p1(g, 128);
  CHECK(grid.cost <= -1.0 + 1e-3);
}

TEST_CASE("separator partitions split the chain at its separator group") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 3;
  spec.separator_size = 2;
  spec.seed = 31;
  const Graph g = generate_clustered_graph(spec);
  const std::vector<int> sep = g.vertices_with_label("sep:0");
  REQUIRE(sep.size() == 2);

  bool balanced = false;
  const EdgePartition part = separator_partition(g, sep, &balanced);
  REQUIRE(part.subsets() == 2);
  const auto overlap = part.overlap(0, 1);
  CHECK(overlap.size() <= sep.size());
  for (int v : overlap)
    CHECK(std::find(sep.begin(), sep.end(), v) != sep.end());

  // Every edge lands in exactly one subset.
  CHECK(part.edge_sets[0].size() + part.edge_sets[1].size() == g.edges.size());
}

TEST_CASE("non-separating sets are rejected") {
  const Graph g = triangle_graph();
  CHECK_THROWS_AS(separator_partition(g, {0}, nullptr), ValidationError);
}

TEST_CASE("exhaustive separator search finds the planted separator") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 4;
  spec.separator_size = 1;
  spec.seed = 41;
  const Graph g = generate_clustered_graph(spec);
  const auto found = find_balanced_separator(g, 3);
  REQUIRE(found.has_value());
  // The planted single-vertex separator is optimal here.
  CHECK(found->size() == 1);
  CHECK(g.labels[(*found)[0]] == "sep:0");
}

TEST_CASE("single-layer chain plans cut one separator-wide group") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 3;
  spec.separator_size = 2;
  spec.seed = 57;
  const Graph g = generate_clustered_graph(spec);
  const EdgePartition part = chain_partition(g);
  const int kappa = part.max_overlap();
  const CutPlan plan = plan_qaoa_cuts(g, part, 1, CutMethod::Randomized);
  REQUIRE(plan.groups.size() == 1);
  CHECK(plan.groups[0].width() == kappa);
  REQUIRE(plan.fragments.size() == 2);
  CHECK(plan.fragments[0].support == part.vertex_sets[0]);
  CHECK(plan.fragments[1].support == part.vertex_sets[1]);
}

TEST_CASE("two-layer chain plans respect the group-count bound") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 3;
  spec.separator_size = 1;
  spec.seed = 57;
  const Graph g = generate_clustered_graph(spec);
  const EdgePartition part = chain_partition(g);
  const CutPlan plan = plan_qaoa_cuts(g, part, 2, CutMethod::Randomized);
  CHECK(plan.groups.size() <= 3);  // (2p-1) * one overlapping pair
  for (const auto& grp : plan.groups)
    CHECK(grp.width() <= part.max_overlap());
}

TEST_CASE("plan structure bounds hold across the generated family") {
  for (int r = 2; r <= 4; ++r) {
    for (int k = 1; k <= 2; ++k) {
      for (int p = 1; p <= 3; ++p) {
        ClusteredGraphSpec spec;
        spec.clusters = r;
        spec.cluster_size = 3;
        spec.separator_size = k;
        spec.seed = 1000 + 100 * r + 10 * k + p;
        const Graph g = generate_clustered_graph(spec);
        const EdgePartition part = chain_partition(g);
        const int kappa = part.max_overlap();
        int pairs = 0;
        for (int i = 0; i < part.subsets(); ++i)
          for (int j = i + 1; j < part.subsets(); ++j)
            if (!part.overlap(i, j).empty()) ++pairs;

        const CutPlan plan = plan_qaoa_cuts(g, part, p, CutMethod::Randomized);
        CHECK(static_cast<int>(plan.groups.size()) <= (2 * p - 1) * pairs);
        for (const auto& grp : plan.groups) CHECK(grp.width() <= kappa);
        REQUIRE(plan.fragments.size() == static_cast<std::size_t>(r));
        for (int b = 0; b < r; ++b)
          CHECK(plan.fragments[b].support == part.vertex_sets[b]);
      }
    }
  }
}

TEST_CASE("fragment widths obey the balanced-separator bound") {
  // With a 2/3-balanced separator of size kappa <= n/6, both sides have at
  // most floor(5n/6) vertices.
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 6;
  spec.separator_size = 2;
  spec.seed = 71;
  const Graph g = generate_clustered_graph(spec);
  const std::vector<int> sep = g.vertices_with_label("sep:0");
  bool balanced = false;
  const EdgePartition part = separator_partition(g, sep, &balanced);
  CHECK(balanced);
  REQUIRE(sep.size() * 6 <= static_cast<std::size_t>(g.num_vertices));
  const CutPlan plan = plan_qaoa_cuts(g, part, 2, CutMethod::Randomized);
  CHECK(plan.max_fragment_width() <= (5 * g.num_vertices) / 6);
}

TEST_CASE("fragment configuration counts match the closed form") {
  CHECK(count_fragment_configs(2, 3, 1) == BigInt(1812));
  CHECK(count_fragment_configs(2, 4, 1) == BigInt(3540));
  CHECK(count_fragment_configs(2, 5, 1) == BigInt(5268));
  // Large arguments stay exact.
  const BigInt huge = count_fragment_configs(4, 6, 3);
  CHECK(huge > BigInt(0));
  CHECK(huge.str().size() > 20);
}

TEST_CASE("fragment width formula") {
  CHECK(max_fragment_qubits(25, 2, 1) == 30);
  CHECK(max_fragment_qubits(20, 1, 1) == 22);
  CHECK(max_fragment_qubits(17, 3, 0) == 17);
}

TEST_CASE("exact optimization solves the single edge") {
  const Graph g = single_edge_graph();
  OptimizeConfig config;
  config.fd_step = 1e-3;
  config.max_iters = 200;
  config.coarse_candidates = 16;
  config.seed = 2;
  const OptimizeResult res = optimize_params(1, exact_evaluator(g), config);
  CHECK(res.cost <= -1.0 + 1e-3);
  CHECK(res.trace.size() == static_cast<std::size_t>(res.steps) + 1);
}

TEST_CASE("exact descent produces a non-increasing trace") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 5;
  const Graph g = generate_clustered_graph(spec);
  OptimizeConfig config;
  config.max_iters = 40;
  config.coarse_candidates = 9;
  config.seed = 8;
  const OptimizeResult res = optimize_params(1, exact_evaluator(g), config);
  for (std::size_t i = 1; i < res.trace.size(); ++i)
    CHECK(res.trace[i].cost <= res.trace[i - 1].cost + 1e-12);
}

TEST_CASE("shot-based optimization lands near the exact optimum") {
  // Slow: every evaluation is a 10^5-shot cut estimate on 6 qubits.
  Graph g;
  for (std::uint64_t attempt = 0;; ++attempt) {
    ClusteredGraphSpec spec;
    spec.clusters = 2;
    spec.cluster_size = 2;
    spec.separator_size = 2;
    spec.seed = derive_seed(14, attempt);
    g = generate_clustered_graph(spec);
    if (chain_partition(g).max_overlap() == 2) break;
    REQUIRE(attempt < 64);
  }
  const GridSearchResult grid = grid_search_p1(g, 128);

  const EdgePartition part = chain_partition(g);
  const DiagonalObservable obs = maxcut_cost_operator(g);
  CostEvaluator noisy = [&](const QAOAParams& params, std::uint64_t seed) {
    const CutPlan plan = plan_qaoa_cuts(g, part, 1, CutMethod::Randomized);
    const Circuit circuit = build_qaoa_circuit(g, params, &part);
    ShotOptions opt;
    opt.shots = 100000;
    opt.seed = seed;
    return estimate(circuit, plan, obs, opt).mean;
  };

  OptimizeConfig config;
  config.fd_step = 0.05;
  config.max_iters = 25;
  config.coarse_candidates = 9;
  config.seed = 77;
  const OptimizeResult res = optimize_params(1, noisy, config);
  const double true_cost =
      exact_expectation(build_qaoa_circuit(g, res.params), obs);
  CHECK(true_cost <= grid.cost + 0.05);
}

TEST_CASE("optimizer matches the grid oracle on a small instance") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 5;
  const Graph g = generate_clustered_graph(spec);
  const GridSearchResult grid = grid_search_p1(g, 128);
  OptimizeConfig config;
  config.max_iters = 200;
  config.coarse_candidates = 64;
  config.seed = 12;
  const OptimizeResult res = optimize_params(1, exact_evaluator(g), config);
  CHECK(res.cost <= grid.cost + 1e-2);
}

TEST_CASE("graph and params json round-trip") {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 11;
  const Graph g = generate_clustered_graph(spec);
  const Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.num_vertices == g.num_vertices);
  CHECK(back.edges == g.edges);
  CHECK(back.labels == g.labels);

  QAOAParams p;
  p.gammas = {0.125, 0.25};
  p.betas = {0.5, 0.0625};
  const QAOAParams bp = params_from_json(params_to_json(p));
  CHECK(bp.gammas == p.gammas);
  CHECK(bp.betas == p.betas);
}
