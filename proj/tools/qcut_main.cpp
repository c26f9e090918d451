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

// qcut: benchmark driver for randomized wire cutting on QAOA Max-Cut.
//
// Every stochastic command takes a mandatory --seed; with a fixed seed and
// --workers 1 all output files are byte-identical between runs. Wall times
// are only written when --timings is given (they are the one quantity that
// cannot be reproducible); without it the wall_time_ms column reads 0.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcut/clifford.hpp"
#include "qcut/config.hpp"
#include "qcut/cutting.hpp"
#include "qcut/decomposition.hpp"
#include "qcut/density.hpp"
#include "qcut/io.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/statevector.hpp"

using namespace qcut;
using nlohmann::json;

namespace {

constexpr int kExactCliQubitCap = 13;

struct GlobalOpts {
  std::string out;
  std::string format = "csv";
  int workers = 1;
  bool timings = false;
};

void emit(const GlobalOpts& g, const std::string& content) {
  if (g.out.empty())
    std::cout << content;
  else
    write_file(g.out, content);
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct ResultRow {
  std::string experiment;
  int k_total = 0;
  int p = 0;
  std::string method;
  std::uint64_t shots = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double variance = 0.0;
  double exact = 0.0;
  double wall_time_ms = 0.0;
};

const std::vector<std::string> kResultHeader = {
    "experiment", "k_total", "p",     "method", "shots",
    "mean",       "stderr",  "variance", "exact",  "wall_time_ms"};

std::string render_rows(const GlobalOpts& g, const std::vector<ResultRow>& rows) {
  if (g.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json o;
      o["experiment"] = r.experiment;
      o["k_total"] = r.k_total;
      o["p"] = r.p;
      o["method"] = r.method;
      o["shots"] = r.shots;
      o["mean"] = r.mean;
      o["stderr"] = r.std_error;
      o["variance"] = r.variance;
      o["exact"] = r.exact;
      o["wall_time_ms"] = r.wall_time_ms;
      out.push_back(std::move(o));
    }
    return out.dump(2) + "\n";
  }
  CsvTable table;
  table.header = kResultHeader;
  for (const auto& r : rows) {
    table.rows.push_back({r.experiment, std::to_string(r.k_total),
                          std::to_string(r.p), r.method,
                          std::to_string(r.shots), format_double(r.mean),
                          format_double(r.std_error), format_double(r.variance),
                          format_double(r.exact),
                          format_double(r.wall_time_ms)});
  }
  return table.to_string();
}

Graph load_graph(const std::string& path) {
  return graph_from_json(read_file(path));
}

QAOAParams resolve_params(const std::string& params_path,
                          const std::vector<double>& gammas,
                          const std::vector<double>& betas) {
  if (!params_path.empty()) return params_from_json(read_file(params_path));
  if (gammas.empty() || gammas.size() != betas.size())
    throw ValidationError("provide --params or matching --gammas/--betas");
  QAOAParams p;
  p.gammas = gammas;
  p.betas = betas;
  return p;
}

/// Exact-optimized parameters for a small instance: grid reference for one
/// layer, exact finite-difference descent for more.
QAOAParams optimized_reference_params(const Graph& g, int p,
                                      std::uint64_t seed, int workers) {
  if (g.num_vertices > kExactCliQubitCap)
    throw ValidationError("instance too large for exact parameter optimization; pass --params");
  if (p == 1) return grid_search_p1(g, 96).params;
  OptimizeConfig config;
  config.seed = seed;
  config.workers = workers;
  config.max_iters = 150;
  config.coarse_candidates = 48;
  const OptimizeResult res = optimize_params(p, exact_evaluator(g), config);
  return res.params;
}

struct PreparedCut {
  Circuit circuit;
  CutPlan plan;
  EdgePartition partition;
};

/// Chain-labelled graphs use the generator's separator groups; unlabelled
/// small graphs fall back to the exhaustive balanced-separator search.
PreparedCut prepare_cut(const Graph& g, const QAOAParams& params,
                        CutMethod method) {
  PreparedCut out;
  bool have_chain = false;
  for (const auto& label : g.labels)
    if (label.rfind("sep:", 0) == 0) have_chain = true;
  if (have_chain) {
    out.partition = chain_partition(g);
  } else {
    const auto sep = find_balanced_separator(g);
    if (!sep)
      throw ValidationError("no balanced separator found; cannot build a cut plan");
    out.partition = separator_partition(g, *sep);
  }
  out.plan = plan_qaoa_cuts(g, out.partition, params.layers(), method);
  out.circuit = build_qaoa_circuit(g, params, &out.partition);
  return out;
}

int cmd_gen_graph(const GlobalOpts& g, int r, int n, int k, double p_intra,
                  double p_sep, std::uint64_t seed) {
  ClusteredGraphSpec spec;
  spec.clusters = r;
  spec.cluster_size = n;
  spec.separator_size = k;
  spec.p_intra = p_intra;
  spec.p_sep = p_sep;
  spec.seed = seed;
  emit(g, graph_to_json(generate_clustered_graph(spec)) + "\n");
  return 0;
}

int cmd_exact(const GlobalOpts& g, const std::string& graph_path,
              const std::string& params_path,
              const std::vector<double>& gammas,
              const std::vector<double>& betas) {
  const Graph graph = load_graph(graph_path);
  if (graph.num_vertices > kExactCliQubitCap)
    throw ValidationError("exact evaluation is capped at " +
                          std::to_string(kExactCliQubitCap) + " qubits");
  const QAOAParams params = resolve_params(params_path, gammas, betas);
  const double cost = exact_expectation(build_qaoa_circuit(graph, params),
                                        maxcut_cost_operator(graph));
  json out;
  out["cost"] = cost;
  out["qubits"] = graph.num_vertices;
  out["p"] = params.layers();
  emit(g, out.dump(2) + "\n");
  return 0;
}

int cmd_cut_estimate(const GlobalOpts& g, const std::string& graph_path,
                     const std::string& params_path,
                     const std::vector<double>& gammas,
                     const std::vector<double>& betas,
                     const std::string& method_name, std::uint64_t shots,
                     std::uint64_t seed) {
  const Graph graph = load_graph(graph_path);
  const QAOAParams params = resolve_params(params_path, gammas, betas);
  const PreparedCut cut =
      prepare_cut(graph, params, cut_method_from_name(method_name));
  ShotOptions opt;
  opt.shots = shots;
  opt.seed = seed;
  opt.workers = g.workers;
  const Estimate e =
      estimate(cut.circuit, cut.plan, maxcut_cost_operator(graph), opt);
  emit(g, estimate_to_json(e) + "\n");
  return 0;
}

int cmd_bench_variance(const GlobalOpts& g, const std::string& graph_path,
                       int p, const std::vector<std::string>& methods,
                       const std::vector<std::uint64_t>& shots_grid,
                       int repetitions, const std::string& params_path,
                       std::uint64_t seed) {
  const Graph graph = load_graph(graph_path);
  QAOAParams params =
      params_path.empty()
          ? optimized_reference_params(graph, p, derive_seed(seed, 0), g.workers)
          : params_from_json(read_file(params_path));
  if (params.layers() != p)
    throw ValidationError("--p does not match the parameter file");

  const DiagonalObservable obs = maxcut_cost_operator(graph);
  const double exact =
      exact_expectation(build_qaoa_circuit(graph, params), obs);

  std::vector<ResultRow> rows;
  const std::string tag =
      "bench-variance[reps=" + std::to_string(repetitions) + "]";
  for (const std::string& method_name : methods) {
    const PreparedCut cut =
        prepare_cut(graph, params, cut_method_from_name(method_name));
    for (std::uint64_t shots : shots_grid) {
      std::vector<double> means;
      double variance_sum = 0.0;
      const auto start = std::chrono::steady_clock::now();
      for (int rep = 0; rep < repetitions; ++rep) {
        ShotOptions opt;
        opt.shots = shots;
        opt.workers = g.workers;
        opt.seed = derive_seed(seed, 0x1000 + 131 * rep + shots +
                                         (method_name == "pauli" ? 7 : 0));
        const Estimate e = estimate(cut.circuit, cut.plan, obs, opt);
        means.push_back(e.mean);
        variance_sum += e.sample_variance;
      }
      ResultRow row;
      row.experiment = tag;
      row.k_total = cut.plan.total_cut_wires();
      row.p = p;
      row.method = method_name;
      row.shots = shots;
      double m = 0.0;
      for (double v : means) m += v;
      m /= means.size();
      double spread = 0.0;
      for (double v : means) spread += (v - m) * (v - m);
      row.mean = m;
      row.std_error = means.size() > 1
                          ? std::sqrt(spread / (means.size() - 1))
                          : 0.0;
      row.variance = variance_sum / repetitions;
      row.exact = exact;
      row.wall_time_ms = g.timings ? elapsed_ms(start) : 0.0;
      rows.push_back(std::move(row));
    }
  }
  emit(g, render_rows(g, rows));
  return 0;
}

int cmd_bench_cutsize(const GlobalOpts& g, int cluster_size,
                      const std::vector<int>& k_list, int p,
                      const std::vector<std::string>& methods,
                      std::uint64_t shots, std::uint64_t seed) {
  std::vector<ResultRow> rows;
  for (int k : k_list) {
    // Regenerate until every separator vertex really bridges both sides,
    // so the planned cut width equals k.
    Graph graph;
    EdgePartition part;
    bool found = false;
    for (std::uint64_t attempt = 0; attempt < 64 && !found; ++attempt) {
      ClusteredGraphSpec spec;
      spec.clusters = 2;
      spec.cluster_size = cluster_size;
      spec.separator_size = k;
      spec.seed = derive_seed(seed, 0x2000 + 97 * k + attempt);
      graph = generate_clustered_graph(spec);
      part = chain_partition(graph);
      found = part.max_overlap() == k;
    }
    if (!found)
      throw ValidationError("could not realize a full-width separator for k=" +
                            std::to_string(k));

    const QAOAParams params =
        optimized_reference_params(graph, p, derive_seed(seed, 3), g.workers);
    const DiagonalObservable obs = maxcut_cost_operator(graph);
    const double exact =
        exact_expectation(build_qaoa_circuit(graph, params), obs);

    for (const std::string& method_name : methods) {
      const CutMethod method = cut_method_from_name(method_name);
      const CutPlan plan = plan_qaoa_cuts(graph, part, p, method);
      const Circuit circuit = build_qaoa_circuit(graph, params, &part);
      ShotOptions opt;
      opt.shots = shots;
      opt.workers = g.workers;
      opt.seed = derive_seed(seed, 0x3000 + 17 * k +
                                       (method_name == "pauli" ? 1 : 0));
      const auto start = std::chrono::steady_clock::now();
      const Estimate e = estimate(circuit, plan, obs, opt);
      ResultRow row;
      row.experiment = "bench-cutsize[n=" + std::to_string(cluster_size) + "]";
      row.k_total = plan.total_cut_wires();
      row.p = p;
      row.method = method_name;
      row.shots = shots;
      row.mean = e.mean;
      row.std_error = e.std_error;
      row.variance = e.sample_variance;
      row.exact = exact;
      row.wall_time_ms = g.timings ? elapsed_ms(start) : 0.0;
      rows.push_back(std::move(row));
      if (e.sample_variance > e.per_shot_bound * e.per_shot_bound)
        throw NumericalError("sample variance exceeded the bound squared");
    }
  }
  // Informational slope fit, log2(variance) against total cut wires.
  for (const std::string& method_name : methods) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows) {
      if (row.method != method_name || row.variance <= 0.0) continue;
      const double x = row.k_total, y = std::log2(row.variance);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    if (n >= 2) {
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      std::cerr << "# log2-variance slope (" << method_name
                << "): " << format_double(slope) << "\n";
    }
  }
  emit(g, render_rows(g, rows));
  return 0;
}

int cmd_qaoa_opt(const GlobalOpts& g, const std::string& graph_path, int p,
                 const std::string& evaluator_name,
                 const std::string& method_name, std::uint64_t shots,
                 std::uint64_t seed, int max_iters, double learning_rate,
                 double fd_step, const std::string& out_params) {
  const Graph graph = load_graph(graph_path);
  OptimizeConfig config;
  config.seed = seed;
  config.workers = g.workers;
  config.max_iters = max_iters;
  config.learning_rate = learning_rate;

  CostEvaluator evaluate;
  if (evaluator_name == "exact") {
    config.fd_step = fd_step > 0 ? fd_step : 1e-3;
    evaluate = exact_evaluator(graph);
  } else if (evaluator_name == "cut") {
    config.fd_step = fd_step > 0 ? fd_step : 0.05;
    config.coarse_candidates = 16;
    const CutMethod method = cut_method_from_name(method_name);
    const DiagonalObservable obs = maxcut_cost_operator(graph);
    const int workers = g.workers;
    evaluate = [graph, method, obs, shots, workers](const QAOAParams& params,
                                                    std::uint64_t eval_seed) {
      const PreparedCut cut = prepare_cut(graph, params, method);
      ShotOptions opt;
      opt.shots = shots;
      opt.seed = eval_seed;
      opt.workers = workers;
      return estimate(cut.circuit, cut.plan, obs, opt).mean;
    };
  } else {
    throw ValidationError("evaluator must be 'exact' or 'cut'");
  }

  const OptimizeResult res = optimize_params(p, evaluate, config);

  CsvTable trace;
  trace.header = {"step", "cost"};
  for (int l = 0; l < p; ++l) trace.header.push_back("gamma_" + std::to_string(l));
  for (int l = 0; l < p; ++l) trace.header.push_back("beta_" + std::to_string(l));
  for (std::size_t s = 0; s < res.trace.size(); ++s) {
    std::vector<std::string> row = {std::to_string(s),
                                    format_double(res.trace[s].cost)};
    for (double v : res.trace[s].params.gammas) row.push_back(format_double(v));
    for (double v : res.trace[s].params.betas) row.push_back(format_double(v));
    trace.rows.push_back(std::move(row));
  }
  emit(g, trace.to_string());
  if (!out_params.empty())
    write_file(out_params, params_to_json(res.params) + "\n");
  std::cerr << "# final cost " << format_double(res.cost) << " after "
            << res.steps << " steps\n";
  return 0;
}

int cmd_sample(const GlobalOpts& g, const std::string& graph_path,
               const std::string& params_path,
               const std::vector<double>& gammas,
               const std::vector<double>& betas,
               const std::string& method_name, std::uint64_t shots,
               std::uint64_t seed, bool no_cut) {
  const Graph graph = load_graph(graph_path);
  const QAOAParams params = resolve_params(params_path, gammas, betas);
  const DiagonalObservable obs = maxcut_cost_operator(graph);

  Circuit circuit;
  CutPlan plan;
  if (no_cut) {
    circuit = build_qaoa_circuit(graph, params);
    Fragment whole;
    for (std::size_t i = 0; i < circuit.ops.size(); ++i)
      if (std::holds_alternative<Gate>(circuit.ops[i]))
        whole.op_indices.push_back(i);
    plan.fragments.push_back(std::move(whole));
  } else {
    PreparedCut cut =
        prepare_cut(graph, params, cut_method_from_name(method_name));
    circuit = std::move(cut.circuit);
    plan = std::move(cut.plan);
  }

  ShotOptions opt;
  opt.shots = shots;
  opt.seed = seed;
  opt.workers = g.workers;
  const auto samples = sample_cut(circuit, plan, opt);

  // mu is the exact mean cut value of the intact circuit; the hit-rate
  // counts samples at or above it.
  const Circuit intact = build_qaoa_circuit(graph, params);
  const auto q = exact_distribution(intact);
  double mu = 0.0;
  for (std::size_t x = 0; x < q.size(); ++x)
    mu += q[x] * cut_value(graph, x);

  std::uint64_t hits = 0;
  std::ostringstream bits;
  for (std::uint64_t s : samples) {
    for (int qubit = graph.num_vertices - 1; qubit >= 0; --qubit)
      bits << ((s >> qubit) & 1);
    bits << '\n';
    if (cut_value(graph, s) >= mu) ++hits;
  }
  emit(g, bits.str());

  const int m = graph.edge_count();
  const double bound =
      1.0 / (std::pow(5.0, plan.total_cut_wires()) * m);
  const double rate = static_cast<double>(hits) / shots;
  const double slack = 5.0 * std::sqrt(bound * (1.0 - bound) / shots);
  json report;
  report["shots"] = shots;
  report["hits"] = hits;
  report["hit_rate"] = rate;
  report["mu"] = mu;
  report["edges"] = m;
  report["k_total"] = plan.total_cut_wires();
  report["rate_bound"] = bound;
  report["passed"] = rate >= bound - slack;
  std::cout << report.dump(2) << "\n";
  if (!report["passed"].get<bool>())
    throw NumericalError("hit rate fell below the guaranteed bound");
  return 0;
}

int cmd_scaling(const GlobalOpts& g, const std::string& graph_path,
                const std::string& params_path,
                const std::vector<double>& gammas,
                const std::vector<double>& betas,
                const std::string& method_name, std::uint64_t shots,
                const std::vector<int>& workers_list, std::uint64_t seed) {
  const Graph graph = load_graph(graph_path);
  const QAOAParams params = resolve_params(params_path, gammas, betas);
  const PreparedCut cut =
      prepare_cut(graph, params, cut_method_from_name(method_name));
  const DiagonalObservable obs = maxcut_cost_operator(graph);

  CsvTable table;
  table.header = {"workers", "mean", "stderr", "wall_time_ms", "speedup"};
  std::optional<double> reference_mean;
  double t1 = 0.0;
  std::vector<double> speedups;
  for (int workers : workers_list) {
    ShotOptions opt;
    opt.shots = shots;
    opt.seed = seed;
    opt.workers = workers;
    const auto start = std::chrono::steady_clock::now();
    const Estimate e = estimate(cut.circuit, cut.plan, obs, opt);
    const double ms = elapsed_ms(start);
    if (!reference_mean) {
      reference_mean = e.mean;
      t1 = ms;
    } else if (e.mean != *reference_mean) {
      throw NumericalError("worker count changed the estimate");
    }
    const double speedup = ms > 0 ? t1 / ms : 1.0;
    speedups.push_back(speedup);
    table.rows.push_back({std::to_string(workers), format_double(e.mean),
                          format_double(e.std_error),
                          format_double(g.timings ? ms : 0.0),
                          format_double(g.timings ? speedup : 0.0)});
  }
  if (g.timings) {
    for (std::size_t i = 1; i < speedups.size(); ++i)
      if (speedups[i] + 0.05 < speedups[i - 1])
        std::cerr << "# warning: speedup dropped between worker counts "
                  << workers_list[i - 1] << " and " << workers_list[i] << "\n";
  }
  emit(g, table.to_string());
  return 0;
}

int cmd_selftest(const GlobalOpts& g, std::uint64_t seed, bool corrupt_pauli) {
  int failures = 0;
  std::ostringstream out;
  auto report = [&failures, &out](const std::string& name, double value,
                                  double limit) {
    const bool ok = value <= limit;
    if (!ok) ++failures;
    out << (ok ? "[ok]   " : "[FAIL] ") << name << ": "
        << format_double(value) << " (limit " << format_double(limit)
        << ")\n";
  };

  for (int k : {1, 2, 3}) {
    const double residual = verify_identity(randomized_decomposition(k));
    report("randomized identity residual d=" + std::to_string(1 << k),
           residual, 1e-12);
  }

  QuasiDecomposition pauli = pauli_decomposition();
  if (corrupt_pauli) {
    // Negative control: flipping one sign must be caught below.
    pauli.terms[5].coefficient = -pauli.terms[5].coefficient;
  }
  report("pauli identity residual", verify_identity(pauli), 1e-12);
  report("pauli one-norm error", std::abs(pauli.one_norm - 4.0), 1e-15);

  report("2-design deviation (k=1, exhaustive)",
         verify_2design(1, TwoDesignMode::Exhaustive), 1e-12);
  report("2-design deviation (k=2, 20000 samples)",
         verify_2design(2, TwoDesignMode::Sampled, 20000, derive_seed(seed, 1)),
         0.05);

  // Exact unbiasedness on a small cut instance.
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 11;
  const Graph graph = generate_clustered_graph(spec);
  QAOAParams params;
  params.gammas = {0.5};
  params.betas = {0.3};
  const EdgePartition part = chain_partition(graph);
  const CutPlan plan = plan_qaoa_cuts(graph, part, 1, CutMethod::Randomized);
  const Circuit circuit = build_qaoa_circuit(graph, params, &part);
  const DiagonalObservable obs = maxcut_cost_operator(graph);
  const double gap = std::abs(exact_cut_expectation(circuit, plan, obs) -
                              exact_expectation(circuit, obs));
  report("exact cut unbiasedness gap", gap, 1e-10);

  if (failures) {
    out << failures << " check(s) failed\n";
    emit(g, out.str());
    throw NumericalError("selftest failed");
  }
  out << "all checks passed\n";
  emit(g, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wire-cutting circuit simulator and QAOA Max-Cut benchmark"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out", g.out, "output file (stdout when omitted)");
  app.add_option("--format", g.format, "table format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", g.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timings", g.timings,
               "record wall times (output is no longer reproducible)");

  std::uint64_t seed = 0;
  std::string graph_path, params_path, method = "randomized";
  std::vector<double> gammas, betas;
  std::uint64_t shots = 100000;
  int p = 1;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--params", params_path, "parameter JSON file");
    cmd->add_option("--gammas", gammas, "gamma values")->delimiter(',');
    cmd->add_option("--betas", betas, "beta values")->delimiter(',');
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "master seed")->required();
  };
  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", method, "cut method")
        ->check(CLI::IsMember({"randomized", "pauli"}));
  };

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "generate a clustered instance");
  gen->fallthrough();
  int r = 2, n = 3, k = 1;
  double p_intra = 0.7, p_sep = 0.3;
  gen->add_option("--r", r, "clusters")->required();
  gen->add_option("--n", n, "vertices per cluster")->required();
  gen->add_option("--k", k, "separator size")->required();
  gen->add_option("--p-intra", p_intra, "intra-cluster edge probability");
  gen->add_option("--p-sep", p_sep, "cluster-separator edge probability");
  add_seed(gen);

  // exact
  auto* exact = app.add_subcommand("exact", "exact cost of a QAOA circuit");
  exact->fallthrough();
  add_graph(exact);
  add_params(exact);

  // cut-estimate
  auto* est = app.add_subcommand("cut-estimate",
                                 "Monte Carlo cut estimate of the QAOA cost");
  est->fallthrough();
  add_graph(est);
  add_params(est);
  add_method(est);
  est->add_option("--shots", shots, "shot count")->check(CLI::PositiveNumber);
  add_seed(est);

  // bench-variance
  auto* benchv = app.add_subcommand(
      "bench-variance", "estimator spread as a function of the shot count");
  benchv->fallthrough();
  add_graph(benchv);
  benchv->add_option("--p", p, "layers")->check(CLI::PositiveNumber);
  std::vector<std::string> methods = {"randomized", "pauli"};
  benchv->add_option("--methods", methods, "cut methods")->delimiter(',');
  std::vector<std::uint64_t> shots_grid = {1000, 10000, 100000, 1000000};
  benchv->add_option("--shots-grid", shots_grid, "shot counts")->delimiter(',');
  int repetitions = 20;
  benchv->add_option("--reps", repetitions, "independent repetitions per point")
      ->check(CLI::PositiveNumber);
  benchv->add_option("--params", params_path, "parameter JSON file");
  add_seed(benchv);

  // bench-cutsize
  auto* benchk = app.add_subcommand(
      "bench-cutsize", "estimator variance as a function of the cut width");
  benchk->fallthrough();
  int cluster_size = 3;
  benchk->add_option("--n", cluster_size, "vertices per cluster");
  std::vector<int> k_list = {1, 2, 3};
  benchk->add_option("--k-list", k_list, "separator sizes")->delimiter(',');
  benchk->add_option("--p", p, "layers")->check(CLI::PositiveNumber);
  benchk->add_option("--methods", methods, "cut methods")->delimiter(',');
  benchk->add_option("--shots", shots, "shots per point")
      ->check(CLI::PositiveNumber);
  add_seed(benchk);

  // qaoa-opt
  auto* opt = app.add_subcommand("qaoa-opt", "finite-difference descent");
  opt->fallthrough();
  add_graph(opt);
  opt->add_option("--p", p, "layers")->check(CLI::PositiveNumber);
  std::string evaluator = "exact", out_params;
  opt->add_option("--evaluator", evaluator, "cost evaluator")
      ->check(CLI::IsMember({"exact", "cut"}));
  add_method(opt);
  opt->add_option("--shots", shots, "shots per evaluation (cut evaluator)");
  int max_iters = 100;
  double learning_rate = 0.1, fd_step = 0.0;
  opt->add_option("--max-iters", max_iters, "iteration cap");
  opt->add_option("--lr", learning_rate, "initial learning rate");
  opt->add_option("--fd-step", fd_step, "finite-difference step");
  opt->add_option("--out-params", out_params, "where to write the optimum");
  add_seed(opt);

  // sample
  auto* sample = app.add_subcommand("sample", "draw bitstrings from the cut circuit");
  sample->fallthrough();
  add_graph(sample);
  add_params(sample);
  add_method(sample);
  sample->add_option("--shots", shots, "sample count")->check(CLI::PositiveNumber);
  bool no_cut = false;
  sample->add_flag("--no-cut", no_cut, "sample the intact circuit instead");
  add_seed(sample);

  // scaling
  auto* scaling = app.add_subcommand("scaling", "thread-count scaling smoke test");
  scaling->fallthrough();
  add_graph(scaling);
  add_params(scaling);
  add_method(scaling);
  scaling->add_option("--shots", shots, "shot count")->check(CLI::PositiveNumber);
  std::vector<int> workers_list = {1, 2, 4};
  scaling->add_option("--workers-list", workers_list, "worker counts")
      ->delimiter(',');
  add_seed(scaling);

  // selftest
  auto* selftest =
      app.add_subcommand("selftest", "channel, design and unbiasedness checks");
  selftest->fallthrough();
  std::uint64_t selftest_seed = 0;
  selftest->add_option("--seed", selftest_seed, "seed for the sampled checks");
  bool corrupt_pauli = false;
  selftest->add_flag("--corrupt-pauli", corrupt_pauli,
                     "negative control: corrupt the baseline table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed())
      return cmd_gen_graph(g, r, n, k, p_intra, p_sep, seed);
    if (exact->parsed())
      return cmd_exact(g, graph_path, params_path, gammas, betas);
    if (est->parsed())
      return cmd_cut_estimate(g, graph_path, params_path, gammas, betas,
                              method, shots, seed);
    if (benchv->parsed())
      return cmd_bench_variance(g, graph_path, p, methods, shots_grid,
                                repetitions, params_path, seed);
    if (benchk->parsed())
      return cmd_bench_cutsize(g, cluster_size, k_list, p, methods, shots, seed);
    if (opt->parsed())
      return cmd_qaoa_opt(g, graph_path, p, evaluator, method, shots, seed,
                          max_iters, learning_rate, fd_step, out_params);
    if (sample->parsed())
      return cmd_sample(g, graph_path, params_path, gammas, betas, method,
                        shots, seed, no_cut);
    if (scaling->parsed())
      return cmd_scaling(g, graph_path, params_path, gammas, betas, method,
                         shots, workers_list, seed);
    if (selftest->parsed()) return cmd_selftest(g, selftest_seed, corrupt_pauli);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
