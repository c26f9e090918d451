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

#include "qcut/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "qcut/config.hpp"
#include "qcut/shotpool.hpp"
#include "qcut/statevector.hpp"

namespace qcut {

using nlohmann::json;

bool Graph::is_connected() const {
  if (num_vertices == 0) return false;
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(num_vertices, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++count;
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return count == num_vertices;
}

std::vector<int> Graph::vertices_with_label(const std::string& label) const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices; ++v)
    if (labels[v] == label) out.push_back(v);
  return out;
}

namespace {

void validate_spec(const ClusteredGraphSpec& s) {
  if (s.clusters < 2) throw ValidationError("need at least two clusters");
  if (s.cluster_size < 1) throw ValidationError("cluster size must be >= 1");
  if (s.separator_size < 1) throw ValidationError("separator size must be >= 1");
  if (!(s.p_intra > 0.0 && s.p_intra <= 1.0) ||
      !(s.p_sep > 0.0 && s.p_sep <= 1.0))
    throw ValidationError("edge probabilities must lie in (0, 1]");
}

Graph generate_once(const ClusteredGraphSpec& s, Rng& rng) {
  const int r = s.clusters, n = s.cluster_size, k = s.separator_size;
  Graph g;
  g.num_vertices = r * n + (r - 1) * k;
  g.labels.resize(g.num_vertices);

  // Chain layout: cluster 0, sep 0, cluster 1, sep 1, ..., cluster r-1.
  std::vector<std::vector<int>> cluster(r), sep(r - 1);
  int next = 0;
  for (int c = 0; c < r; ++c) {
    for (int i = 0; i < n; ++i) {
      cluster[c].push_back(next);
      g.labels[next++] = "cluster:" + std::to_string(c);
    }
    if (c + 1 < r) {
      for (int i = 0; i < k; ++i) {
        sep[c].push_back(next);
        g.labels[next++] = "sep:" + std::to_string(c);
      }
    }
  }

  for (int c = 0; c < r; ++c)
    for (std::size_t i = 0; i < cluster[c].size(); ++i)
      for (std::size_t j = i + 1; j < cluster[c].size(); ++j)
        if (bernoulli(rng, s.p_intra))
          g.edges.emplace_back(cluster[c][i], cluster[c][j]);

  for (int sg = 0; sg < r - 1; ++sg) {
    for (int side : {sg, sg + 1}) {
      for (int u : cluster[side])
        for (int v : sep[sg])
          if (bernoulli(rng, s.p_sep))
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return g;
}

}  // namespace

Graph generate_clustered_graph(const ClusteredGraphSpec& spec) {
  validate_spec(spec);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng = make_rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    Graph g = generate_once(spec, rng);
    if (g.is_connected()) return g;
  }
  throw ValidationError("could not generate a connected instance in 100 attempts");
}

void validate_params(const QAOAParams& p) {
  if (p.gammas.empty() || p.gammas.size() != p.betas.size())
    throw ValidationError("gamma/beta lengths must match and be >= 1");
}

DiagonalObservable maxcut_cost_operator(const Graph& g) {
  if (g.edges.empty()) throw ValidationError("graph has no edges");
  const double inv_m = 1.0 / static_cast<double>(g.edge_count());
  auto edges = g.edges;
  return DiagonalObservable{
      [edges, inv_m](std::uint64_t x) {
        double s = 0.0;
        for (auto [u, v] : edges) {
          const bool differ = ((x >> u) & 1) != ((x >> v) & 1);
          s += differ ? -1.0 : 1.0;
        }
        return s * inv_m;
      },
      "cost divided by the edge count M"};
}

int cut_value(const Graph& g, std::uint64_t x) {
  int cut = 0;
  for (auto [u, v] : g.edges)
    if (((x >> u) & 1) != ((x >> v) & 1)) ++cut;
  return cut;
}

std::vector<int> EdgePartition::overlap(int i, int j) const {
  std::vector<int> out;
  std::set_intersection(vertex_sets[i].begin(), vertex_sets[i].end(),
                        vertex_sets[j].begin(), vertex_sets[j].end(),
                        std::back_inserter(out));
  return out;
}

int EdgePartition::max_overlap() const {
  int best = 0;
  for (int i = 0; i < subsets(); ++i)
    for (int j = i + 1; j < subsets(); ++j)
      best = std::max(best, static_cast<int>(overlap(i, j).size()));
  return best;
}

namespace {

std::vector<int> edge_support(const std::vector<std::pair<int, int>>& edges) {
  std::set<int> s;
  for (auto [u, v] : edges) {
    s.insert(u);
    s.insert(v);
  }
  return {s.begin(), s.end()};
}

// Connected components of the graph with `removed` vertices deleted.
std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::set<int>& removed) {
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (auto [u, v] : g.edges) {
    if (removed.count(u) || removed.count(v)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(g.num_vertices, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.num_vertices; ++start) {
    if (removed.count(start) || comp[start] >= 0) continue;
    std::vector<int> members;
    std::vector<int> stack = {start};
    comp[start] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = comp[u];
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

EdgePartition separator_partition(const Graph& g,
                                  const std::vector<int>& separator,
                                  bool* balanced) {
  const std::set<int> sep(separator.begin(), separator.end());
  const auto comps = components_without(g, sep);
  if (comps.size() < 2)
    throw ValidationError("separator does not disconnect the graph");

  // Smallest component plus the separator induces one side.
  std::size_t small = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() < comps[small].size()) small = i;

  if (balanced) {
    std::size_t largest = 0;
    for (const auto& comp : comps) largest = std::max(largest, comp.size());
    *balanced = largest * 3 <= static_cast<std::size_t>(g.num_vertices) * 2;
  }

  std::set<int> side(comps[small].begin(), comps[small].end());
  for (int v : separator) side.insert(v);

  EdgePartition part;
  part.edge_sets.resize(2);
  for (auto e : g.edges) {
    if (side.count(e.first) && side.count(e.second))
      part.edge_sets[1].push_back(e);
    else
      part.edge_sets[0].push_back(e);
  }
  part.vertex_sets = {edge_support(part.edge_sets[0]),
                      edge_support(part.edge_sets[1])};
  return part;
}

EdgePartition chain_partition(const Graph& g) {
  std::map<int, int> owner;  // vertex -> cluster id, separators excluded
  int max_cluster = -1;
  for (int v = 0; v < g.num_vertices; ++v) {
    const auto& label = g.labels[v];
    if (label.rfind("cluster:", 0) == 0) {
      owner[v] = std::stoi(label.substr(8));
      max_cluster = std::max(max_cluster, owner[v]);
    }
  }
  if (max_cluster < 1)
    throw ValidationError("graph does not carry chain cluster labels");

  EdgePartition part;
  part.edge_sets.resize(max_cluster + 1);
  for (auto e : g.edges) {
    const bool u_cl = owner.count(e.first), v_cl = owner.count(e.second);
    if (u_cl && v_cl) {
      if (owner[e.first] != owner[e.second])
        throw ValidationError("unexpected edge between distinct clusters");
      part.edge_sets[owner[e.first]].push_back(e);
    } else if (u_cl) {
      part.edge_sets[owner[e.first]].push_back(e);
    } else if (v_cl) {
      part.edge_sets[owner[e.second]].push_back(e);
    } else {
      throw ValidationError("unexpected separator-separator edge");
    }
  }
  for (const auto& es : part.edge_sets)
    part.vertex_sets.push_back(edge_support(es));
  return part;
}

std::optional<std::vector<int>> find_balanced_separator(const Graph& g,
                                                        int max_size) {
  if (g.num_vertices > 12)
    throw ValidationError("exhaustive separator search limited to 12 vertices");
  std::vector<int> verts(g.num_vertices);
  std::iota(verts.begin(), verts.end(), 0);
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> pick(size);
    std::function<std::optional<std::vector<int>>(int, int)> rec =
        [&](int start, int depth) -> std::optional<std::vector<int>> {
      if (depth == size) {
        std::set<int> sep(pick.begin(), pick.end());
        const auto comps = components_without(g, sep);
        if (comps.size() < 2) return std::nullopt;
        std::size_t largest = 0;
        for (const auto& comp : comps) largest = std::max(largest, comp.size());
        if (largest * 3 <= static_cast<std::size_t>(g.num_vertices) * 2)
          return std::vector<int>(pick);
        return std::nullopt;
      }
      for (int v = start; v < g.num_vertices; ++v) {
        pick[depth] = v;
        if (auto found = rec(v + 1, depth + 1)) return found;
      }
      return std::nullopt;
    };
    if (auto found = rec(0, 0)) return found;
  }
  return std::nullopt;
}

namespace {

struct LayoutIndex {
  // Op index where each edge block starts, per layer, plus layer starts.
  std::vector<std::vector<std::size_t>> block_start;
  std::vector<std::size_t> layer_start;  // first edge-block op of each layer
};

Circuit build_with_layout(const Graph& g, const QAOAParams& params,
                          const EdgePartition* order, LayoutIndex* layout) {
  validate_params(params);
  const int p = params.layers();
  Circuit c;
  c.num_qubits = g.num_vertices;
  for (int q = 0; q < g.num_vertices; ++q) c.push_gate(GateKind::H, {q});

  std::vector<std::vector<std::pair<int, int>>> blocks;
  if (order) {
    blocks = order->edge_sets;
  } else {
    blocks.push_back(g.edges);
  }

  if (layout) {
    layout->block_start.assign(p, {});
    layout->layer_start.assign(p, 0);
  }
  for (int layer = 0; layer < p; ++layer) {
    if (layout) layout->layer_start[layer] = c.ops.size();
    for (const auto& block : blocks) {
      if (layout) layout->block_start[layer].push_back(c.ops.size());
      for (auto [u, v] : block)
        c.push_gate(GateKind::RZZ, {u, v}, 2.0 * params.gammas[layer]);
    }
    for (int q = 0; q < g.num_vertices; ++q)
      c.push_gate(GateKind::RX, {q}, 2.0 * params.betas[layer]);
  }
  std::vector<int> all(g.num_vertices);
  std::iota(all.begin(), all.end(), 0);
  c.push_measure(all);
  return c;
}

}  // namespace

Circuit build_qaoa_circuit(const Graph& g, const QAOAParams& params,
                           const EdgePartition* order) {
  return build_with_layout(g, params, order, nullptr);
}

CutPlan plan_qaoa_cuts(const Graph& g, const EdgePartition& partition, int p,
                       CutMethod method) {
  if (p < 1) throw ValidationError("layer count must be >= 1");
  const int r = partition.subsets();
  if (r < 2) throw ValidationError("partition must have at least two subsets");

  QAOAParams dummy;
  dummy.gammas.assign(p, 0.0);
  dummy.betas.assign(p, 0.0);
  LayoutIndex layout;
  const Circuit c = build_with_layout(g, dummy, &partition, &layout);

  // Block visit sequence per qubit (same in every layer).
  std::vector<std::vector<int>> qubit_blocks(g.num_vertices);
  for (int b = 0; b < r; ++b)
    for (int v : partition.vertex_sets[b]) qubit_blocks[v].push_back(b);

  std::vector<CutGroup> groups;
  // Cuts between consecutive block appearances inside each layer.
  for (int layer = 0; layer < p; ++layer) {
    std::map<std::pair<int, int>, std::vector<int>> pair_wires;
    for (int q = 0; q < g.num_vertices; ++q) {
      const auto& seq = qubit_blocks[q];
      for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        pair_wires[{seq[i], seq[i + 1]}].push_back(q);
    }
    for (const auto& [pair, wires] : pair_wires) {
      CutGroup grp;
      grp.position = layout.block_start[layer][pair.second];
      grp.wires = wires;
      grp.method = method;
      groups.push_back(std::move(grp));
    }
  }
  // Cuts across layer boundaries for every qubit shared between blocks,
  // grouped by its (last block, first block) pair.
  for (int layer = 0; layer + 1 < p; ++layer) {
    std::map<std::pair<int, int>, std::vector<int>> pair_wires;
    for (int q = 0; q < g.num_vertices; ++q) {
      const auto& seq = qubit_blocks[q];
      if (seq.size() < 2) continue;
      pair_wires[{seq.back(), seq.front()}].push_back(q);
    }
    for (const auto& [pair, wires] : pair_wires) {
      CutGroup grp;
      grp.position = layout.layer_start[layer + 1];
      grp.wires = wires;
      grp.method = method;
      groups.push_back(std::move(grp));
    }
  }

  // Fragment f collects block f's entangling gates in every layer, the
  // single-qubit gates of its private qubits, and for shared qubits the
  // ones that precede the next cut (H before the first block, mixers after
  // the last).
  CutPlan plan;
  plan.groups = std::move(groups);
  plan.fragments.resize(r);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto* gate = std::get_if<Gate>(&c.ops[i]);
    if (!gate) continue;
    int frag;
    if (gate->wires.size() == 2) {
      // Entangling gate: find its block by layer-local position.
      int layer = 0;
      for (int l = 0; l < p; ++l)
        if (i >= layout.layer_start[l]) layer = l;
      frag = 0;
      for (int b = 0; b < r; ++b)
        if (i >= layout.block_start[layer][b]) frag = b;
    } else {
      const int q = gate->wires[0];
      const auto& seq = qubit_blocks[q];
      if (seq.empty())
        throw ValidationError("qubit " + std::to_string(q) +
                              " is not covered by the partition");
      frag = (gate->kind == GateKind::H) ? seq.front() : seq.back();
    }
    plan.fragments[frag].op_indices.push_back(i);
  }
  for (auto& f : plan.fragments) {
    std::set<int> s;
    for (std::size_t i : f.op_indices)
      for (int w : op_wires(c.ops[i])) s.insert(w);
    f.support.assign(s.begin(), s.end());
  }

  // Structural guarantees of the construction.
  const int kappa = partition.max_overlap();
  int overlapping_pairs = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!partition.overlap(i, j).empty()) ++overlapping_pairs;
  if (static_cast<int>(plan.groups.size()) > (2 * p - 1) * overlapping_pairs)
    throw NumericalError("cut plan exceeds the group-count bound");
  for (const auto& grp : plan.groups)
    if (grp.width() > kappa)
      throw NumericalError("cut group exceeds the separator width");
  for (int b = 0; b < r; ++b)
    if (plan.fragments[b].support != partition.vertex_sets[b])
      throw NumericalError("fragment support does not match its subgraph");

  finalize_plan(c, plan);
  return plan;
}

BigInt count_fragment_configs(int p, int r, int k) {
  if (p < 1 || r < 2 || k < 1)
    throw ValidationError("need p >= 1, r >= 2, k >= 1");
  auto ipow = [](BigInt base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
  };
  return ipow(3, p * k) * ipow(4, (p - 1) * k) +
         BigInt(r - 2) * ipow(12, (2 * p - 1) * k) +
         ipow(3, (p - 1) * k) * ipow(4, p * k);
}

std::int64_t max_fragment_qubits(std::int64_t n, std::int64_t p,
                                 std::int64_t k) {
  if (n < 1 || p < 1 || k < 0)
    throw ValidationError("need n >= 1, p >= 1, k >= 0");
  return n + (3 * p - 1) * k;
}

namespace {

std::vector<double> flatten(const QAOAParams& p) {
  std::vector<double> v = p.gammas;
  v.insert(v.end(), p.betas.begin(), p.betas.end());
  return v;
}

QAOAParams unflatten(const std::vector<double>& v, int p) {
  QAOAParams out;
  out.gammas.assign(v.begin(), v.begin() + p);
  out.betas.assign(v.begin() + p, v.end());
  return out;
}

}  // namespace

OptimizeResult optimize_params(int p, const CostEvaluator& evaluate,
                               const OptimizeConfig& config) {
  if (p < 1) throw ValidationError("layer count must be >= 1");

  QAOAParams current;
  if (config.init) {
    current = *config.init;
    if (current.layers() != p)
      throw ValidationError("initial parameters have the wrong layer count");
  } else {
    // Coarse scan: grid for a single layer, seeded random otherwise.
    double best = std::numeric_limits<double>::infinity();
    Rng rng = make_rng(derive_seed(config.seed, 0xC0A5));
    const int m = std::max(2, config.coarse_candidates);
    if (p == 1) {
      const int side = static_cast<int>(std::ceil(std::sqrt(m)));
      for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
          QAOAParams cand;
          cand.gammas = {M_PI * (i + 0.5) / side};
          cand.betas = {M_PI * (j + 0.5) / side};
          const double v = evaluate(cand, derive_seed(config.seed, 1));
          if (v < best) {
            best = v;
            current = cand;
          }
        }
      }
    } else {
      for (int i = 0; i < m; ++i) {
        QAOAParams cand;
        for (int l = 0; l < p; ++l) {
          cand.gammas.push_back(M_PI * uniform_unit(rng));
          cand.betas.push_back(M_PI * uniform_unit(rng));
        }
        const double v = evaluate(cand, derive_seed(config.seed, 1));
        if (v < best) {
          best = v;
          current = cand;
        }
      }
    }
  }

  OptimizeResult result;
  std::vector<double> theta = flatten(current);
  const int dims = static_cast<int>(theta.size());

  double current_cost = evaluate(current, derive_seed(config.seed, 2));
  result.trace.push_back(TracePoint{current, current_cost});

  for (int step = 0; step < config.max_iters; ++step) {
    // All probes of one iteration share a seed (common random numbers), so
    // shot noise largely cancels in the central differences.
    const std::uint64_t probe_seed = derive_seed(config.seed, 100 + step);
    std::vector<double> grad(dims, 0.0);
    parallel_indexed(static_cast<std::uint64_t>(dims), config.workers,
                     [&](std::uint64_t i) {
                       std::vector<double> plus = theta, minus = theta;
                       plus[i] += config.fd_step;
                       minus[i] -= config.fd_step;
                       const double fp = evaluate(unflatten(plus, p), probe_seed);
                       const double fm = evaluate(unflatten(minus, p), probe_seed);
                       grad[i] = (fp - fm) / (2.0 * config.fd_step);
                     });
    double grad_norm = 0.0;
    for (double gi : grad) grad_norm += gi * gi;
    grad_norm = std::sqrt(grad_norm);
    if (grad_norm < config.grad_tolerance) break;

    // Backtracking halving.
    double lr = config.learning_rate;
    bool accepted = false;
    for (int bt = 0; bt <= config.max_backtracks; ++bt) {
      std::vector<double> cand = theta;
      for (int i = 0; i < dims; ++i) cand[i] -= lr * grad[i];
      const QAOAParams cand_params = unflatten(cand, p);
      const double cost = evaluate(cand_params, probe_seed);
      if (cost <= current_cost) {
        theta = cand;
        current = cand_params;
        current_cost = cost;
        accepted = true;
        break;
      }
      lr *= 0.5;
    }
    if (!accepted) break;
    result.trace.push_back(TracePoint{current, current_cost});
    ++result.steps;
  }

  result.params = current;
  result.cost = current_cost;
  return result;
}

CostEvaluator exact_evaluator(const Graph& g, const EdgePartition* order) {
  // Copies keep the evaluator self-contained.
  std::optional<EdgePartition> ord;
  if (order) ord = *order;
  return [g, obs = maxcut_cost_operator(g), ord](const QAOAParams& params,
                                                 std::uint64_t) {
    return exact_expectation(
        build_qaoa_circuit(g, params, ord ? &*ord : nullptr), obs);
  };
}

GridSearchResult grid_search_p1(const Graph& g, int resolution) {
  const DiagonalObservable obs = maxcut_cost_operator(g);
  GridSearchResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      QAOAParams params;
      params.gammas = {M_PI * i / resolution};
      params.betas = {M_PI * j / resolution};
      const double cost = exact_expectation(build_qaoa_circuit(g, params), obs);
      if (cost < best.cost) {
        best.cost = cost;
        best.params = params;
      }
    }
  }
  return best;
}

std::string graph_to_json(const Graph& g) {
  json out;
  out["num_vertices"] = g.num_vertices;
  out["edges"] = json::array();
  for (auto [u, v] : g.edges) out["edges"].push_back(json::array({u, v}));
  json labels = json::object();
  for (int v = 0; v < g.num_vertices; ++v)
    labels[std::to_string(v)] = g.labels[v];
  out["labels"] = std::move(labels);
  return out.dump(2);
}

Graph graph_from_json(const std::string& text) {
  json in = json::parse(text);
  Graph g;
  g.num_vertices = in.at("num_vertices").get<int>();
  for (const auto& e : in.at("edges"))
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  g.labels.assign(g.num_vertices, "");
  if (in.contains("labels"))
    for (const auto& [key, value] : in.at("labels").items())
      g.labels[std::stoi(key)] = value.get<std::string>();
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices || u == v)
      throw ValidationError("bad edge in graph file");
  return g;
}

std::string params_to_json(const QAOAParams& p) {
  json out;
  out["gammas"] = p.gammas;
  out["betas"] = p.betas;
  return out.dump(2);
}

QAOAParams params_from_json(const std::string& text) {
  json in = json::parse(text);
  QAOAParams p;
  p.gammas = in.at("gammas").get<std::vector<double>>();
  p.betas = in.at("betas").get<std::vector<double>>();
  validate_params(p);
  return p;
}

}  // namespace qcut
