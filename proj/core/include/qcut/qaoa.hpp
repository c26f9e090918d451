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

#ifndef QCUT_QAOA_HPP
#define QCUT_QAOA_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/cutting.hpp"
#include "qcut/observable.hpp"
#include "qcut/rng.hpp"

namespace qcut {

using BigInt = boost::multiprecision::cpp_int;

/// Chain of r clusters with n vertices each, joined by r-1 separator groups
/// of k vertices. Edges appear independently: inside a cluster with
/// probability p_intra, between a cluster vertex and each vertex of an
/// adjacent separator group with probability p_sep. Separator vertices are
/// never adjacent to each other.
struct ClusteredGraphSpec {
  int clusters = 2;          // r
  int cluster_size = 1;      // n
  int separator_size = 1;    // k
  double p_intra = 0.7;
  double p_sep = 0.3;
  std::uint64_t seed = 0;
};

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, u < v
  std::vector<std::string> labels;         // "cluster:i" or "sep:i"

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_connected() const;
  std::vector<int> vertices_with_label(const std::string& label) const;
};

/// Generates the clustered chain family, resampling with a fresh substream
/// until connected (at most 100 attempts).
Graph generate_clustered_graph(const ClusteredGraphSpec& spec);

struct QAOAParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int layers() const { return static_cast<int>(gammas.size()); }
};

void validate_params(const QAOAParams& p);

/// f(x) = (1/M) sum_{(i,j) in E} (-1)^{x_i xor x_j}, range [-1, 1].
/// Smaller is better; the minimum corresponds to a maximum cut.
DiagonalObservable maxcut_cost_operator(const Graph& g);

/// Number of edges cut by the assignment x (unnormalized, in [0, M]).
int cut_value(const Graph& g, std::uint64_t x);

/// Disjoint edge subsets whose union is E, with the induced vertex sets.
struct EdgePartition {
  std::vector<std::vector<std::pair<int, int>>> edge_sets;
  std::vector<std::vector<int>> vertex_sets;  // sorted supports per subset

  int subsets() const { return static_cast<int>(edge_sets.size()); }
  std::vector<int> overlap(int i, int j) const;
  /// kappa: largest pairwise overlap between induced vertex sets.
  int max_overlap() const;
};

/// Splits E into the edges of the subgraph induced on (one side + S) and
/// the rest, where S is a separator whose removal disconnects the graph.
/// The 2/3 balance condition is reported via `balanced`; violating it is a
/// warning, not an error.
EdgePartition separator_partition(const Graph& g,
                                  const std::vector<int>& separator,
                                  bool* balanced = nullptr);

/// Chain-family partition from the generator labels: subset i holds every
/// edge incident to cluster i. Consecutive subsets overlap in (at most) a
/// separator group.
EdgePartition chain_partition(const Graph& g);

/// Exhaustive balanced-separator search over subsets of size <= max_size
/// (graphs up to 12 vertices). Returns the smallest one found.
std::optional<std::vector<int>> find_balanced_separator(const Graph& g,
                                                        int max_size = 3);

/// p-layer Max-Cut ansatz: H on every qubit, then per layer RZZ(2 gamma_l)
/// per edge and RX(2 beta_l) per qubit, then a terminal measurement. When a
/// partition is given, each layer applies its edge subsets contiguously in
/// subset order.
Circuit build_qaoa_circuit(const Graph& g, const QAOAParams& params,
                           const EdgePartition* order = nullptr);

/// Cut plan for the partition-ordered p-layer circuit: one group per
/// adjacent block overlap inside every layer, plus one group per overlap
/// between consecutive layers; at most (2p-1) * overlapping-pairs groups of
/// at most kappa wires, and fragment supports equal to the partition's
/// vertex sets. Positions match build_qaoa_circuit(g, params, &partition)
/// for any params with the same p.
CutPlan plan_qaoa_cuts(const Graph& g, const EdgePartition& partition, int p,
                       CutMethod method);

/// Unique fragment-circuit configurations needed to cut the p-layer chain
/// ansatz with r clusters and separator size k:
///   3^{pk} 4^{(p-1)k} + (r-2) 12^{(2p-1)k} + 3^{(p-1)k} 4^{pk}.
BigInt count_fragment_configs(int p, int r, int k);

/// Largest fragment width in qubits for the chain family: n + (3p-1)k.
std::int64_t max_fragment_qubits(std::int64_t n, std::int64_t p,
                                 std::int64_t k);

/// Cost evaluator used by the optimizer; `seed` feeds shot-based
/// evaluators and is ignored by exact ones.
using CostEvaluator =
    std::function<double(const QAOAParams& params, std::uint64_t seed)>;

struct OptimizeConfig {
  double fd_step = 1e-3;         // central-difference step
  double learning_rate = 0.1;
  int max_iters = 100;
  int max_backtracks = 16;
  double grad_tolerance = 1e-6;  // stop when the gradient norm drops below
  std::uint64_t seed = 0;
  int workers = 1;
  /// Starting point; when absent, a coarse scan picks one (p = 1: grid,
  /// p >= 2: seeded random candidates).
  std::optional<QAOAParams> init;
  int coarse_candidates = 64;
};

struct TracePoint {
  QAOAParams params;
  double cost = 0.0;
};

struct OptimizeResult {
  QAOAParams params;
  double cost = 0.0;
  std::vector<TracePoint> trace;  // initial point plus one entry per step
  int steps = 0;
};

/// Gradient descent with central finite differences and backtracking
/// halving of the step. All probe evaluations of one iteration share a
/// derived seed, so shot-based evaluators see common random numbers.
OptimizeResult optimize_params(int p, const CostEvaluator& evaluate,
                               const OptimizeConfig& config);

CostEvaluator exact_evaluator(const Graph& g, const EdgePartition* order = nullptr);

struct GridSearchResult {
  QAOAParams params;
  double cost = 0.0;
};

/// Dense (gamma, beta) scan over [0, pi)^2 for p = 1; the optimality
/// reference for small instances.
GridSearchResult grid_search_p1(const Graph& g, int resolution = 128);

// Graph JSON: {"num_vertices": v, "edges": [[u, v], ...],
//              "labels": {"0": "cluster:0", ...}}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Params JSON: {"gammas": [...], "betas": [...]}
std::string params_to_json(const QAOAParams& p);
QAOAParams params_from_json(const std::string& text);

}  // namespace qcut

#endif  // QCUT_QAOA_HPP
