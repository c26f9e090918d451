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

#include "qcut/cutting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "qcut/clifford.hpp"
#include "qcut/config.hpp"
#include "qcut/decomposition.hpp"
#include "qcut/density.hpp"
#include "qcut/io.hpp"
#include "qcut/shot_runner.hpp"
#include "qcut/shotpool.hpp"
#include "qcut/superop.hpp"

namespace qcut {

using nlohmann::json;

std::string cut_method_name(CutMethod m) {
  return m == CutMethod::Randomized ? "randomized" : "pauli";
}

CutMethod cut_method_from_name(const std::string& name) {
  if (name == "randomized") return CutMethod::Randomized;
  if (name == "pauli") return CutMethod::Pauli;
  throw ValidationError("unknown cut method: " + name);
}

double CutGroup::scale() const {
  const int k = width();
  if (method == CutMethod::Randomized)
    return static_cast<double>((std::uint64_t{1} << (k + 1)) + 1);  // 2d + 1
  return std::pow(4.0, k);
}

int CutPlan::total_cut_wires() const {
  int total = 0;
  for (const auto& g : groups) total += g.width();
  return total;
}

double CutPlan::shot_bound() const {
  double b = 1.0;
  for (const auto& g : groups) b *= g.scale();
  return b;
}

int CutPlan::max_fragment_width() const {
  int w = 0;
  for (const auto& f : fragments)
    w = std::max(w, static_cast<int>(f.support.size()));
  return w;
}

namespace {

bool is_gate(const CircuitOp& op) { return std::holds_alternative<Gate>(op); }

std::vector<std::size_t> gate_indices(const Circuit& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.ops.size(); ++i)
    if (is_gate(c.ops[i])) idx.push_back(i);
  return idx;
}

void check_groups(const Circuit& c, const std::vector<CutGroup>& groups) {
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    if (g.wires.empty())
      throw ValidationError("cut group " + std::to_string(gi) + " is empty");
    if (g.position > c.ops.size())
      throw ValidationError("cut group " + std::to_string(gi) +
                            " position out of range");
    std::set<int> seen;
    for (int w : g.wires) {
      if (w < 0 || w >= c.num_qubits)
        throw ValidationError("cut group wire out of range");
      if (!seen.insert(w).second)
        throw ValidationError("cut group repeats a wire");
    }
  }
}

// Fragment id of each gate op under connected components: gates are linked
// when consecutive on a qubit and not severed by a cut group between them.
std::vector<int> component_labels(const Circuit& c,
                                  const std::vector<CutGroup>& groups,
                                  const std::vector<std::size_t>& gates) {
  std::map<std::size_t, std::size_t> gate_pos;  // op index -> dense index
  for (std::size_t i = 0; i < gates.size(); ++i) gate_pos[gates[i]] = i;

  std::vector<std::size_t> parent(gates.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    parent[find(a)] = find(b);
  };

  for (int q = 0; q < c.num_qubits; ++q) {
    std::size_t prev = c.ops.size();
    bool has_prev = false;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      if (!is_gate(c.ops[i])) continue;
      const auto& wires = op_wires(c.ops[i]);
      if (std::find(wires.begin(), wires.end(), q) == wires.end()) continue;
      if (has_prev) {
        bool severed = false;
        for (const auto& g : groups) {
          if (std::find(g.wires.begin(), g.wires.end(), q) == g.wires.end())
            continue;
          if (g.position > prev && g.position <= i) severed = true;
        }
        if (!severed) unite(gate_pos[prev], gate_pos[i]);
      }
      prev = i;
      has_prev = true;
    }
  }

  std::vector<int> labels(gates.size());
  std::map<std::size_t, int> roots;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::size_t r = find(i);
    auto it = roots.find(r);
    if (it == roots.end()) it = roots.emplace(r, static_cast<int>(roots.size())).first;
    labels[i] = it->second;
  }
  return labels;
}

std::vector<int> support_of(const Circuit& c,
                            const std::vector<std::size_t>& ops) {
  std::set<int> s;
  for (std::size_t i : ops)
    for (int w : op_wires(c.ops[i])) s.insert(w);
  return {s.begin(), s.end()};
}

// Fills incoming/outgoing group attachments and the recyclability flag.
void attach_groups(const Circuit& c, CutPlan& plan) {
  std::map<std::size_t, int> op_fragment;
  for (std::size_t f = 0; f < plan.fragments.size(); ++f)
    for (std::size_t i : plan.fragments[f].op_indices)
      op_fragment[i] = static_cast<int>(f);

  std::vector<std::pair<int, int>> edges;  // (from fragment, to fragment)
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const auto& g = plan.groups[gi];
    int upstream = -1, downstream = -1;
    for (int q : g.wires) {
      for (std::size_t i = g.position; i-- > 0;) {
        if (!is_gate(c.ops[i])) continue;
        const auto& wires = op_wires(c.ops[i]);
        if (std::find(wires.begin(), wires.end(), q) != wires.end()) {
          upstream = op_fragment.at(i);
          break;
        }
      }
      for (std::size_t i = g.position; i < c.ops.size(); ++i) {
        if (!is_gate(c.ops[i])) continue;
        const auto& wires = op_wires(c.ops[i]);
        if (std::find(wires.begin(), wires.end(), q) != wires.end()) {
          downstream = op_fragment.at(i);
          break;
        }
      }
    }
    if (upstream >= 0)
      plan.fragments[upstream].outgoing_groups.push_back(static_cast<int>(gi));
    if (downstream >= 0)
      plan.fragments[downstream].incoming_groups.push_back(static_cast<int>(gi));
    if (upstream >= 0 && downstream >= 0) edges.emplace_back(upstream, downstream);
  }

  // Kahn's algorithm on the fragment multigraph.
  const std::size_t nf = plan.fragments.size();
  std::vector<int> indeg(nf, 0);
  std::vector<std::vector<int>> adj(nf);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (std::size_t f = 0; f < nf; ++f)
    if (indeg[f] == 0) queue.push_back(static_cast<int>(f));
  std::size_t seen = 0;
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    ++seen;
    for (int t : adj[f])
      if (--indeg[t] == 0) queue.push_back(t);
  }
  plan.single_device_recyclable = (seen == nf);
}

}  // namespace

void finalize_plan(const Circuit& c, CutPlan& plan) {
  for (auto& f : plan.fragments) {
    f.incoming_groups.clear();
    f.outgoing_groups.clear();
  }
  attach_groups(c, plan);
  validate_plan(c, plan);
}

void validate_plan(const Circuit& c, const CutPlan& plan) {
  check_groups(c, plan.groups);
  const auto gates = gate_indices(c);
  std::set<std::size_t> covered;
  std::map<std::size_t, int> op_fragment;
  for (std::size_t f = 0; f < plan.fragments.size(); ++f) {
    for (std::size_t i : plan.fragments[f].op_indices) {
      if (i >= c.ops.size() || !is_gate(c.ops[i]))
        throw ValidationError("fragment lists a non-gate op");
      if (!covered.insert(i).second)
        throw ValidationError("fragments overlap at op " + std::to_string(i));
      op_fragment[i] = static_cast<int>(f);
    }
  }
  if (covered.size() != gates.size())
    throw ValidationError("fragments do not cover the gate set");

  // No uncut wire may connect two fragments.
  for (int q = 0; q < c.num_qubits; ++q) {
    std::size_t prev = 0;
    bool has_prev = false;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      if (!is_gate(c.ops[i])) continue;
      const auto& wires = op_wires(c.ops[i]);
      if (std::find(wires.begin(), wires.end(), q) == wires.end()) continue;
      if (has_prev && op_fragment.at(prev) != op_fragment.at(i)) {
        bool severed = false;
        for (const auto& g : plan.groups) {
          if (std::find(g.wires.begin(), g.wires.end(), q) == g.wires.end())
            continue;
          if (g.position > prev && g.position <= i) severed = true;
        }
        if (!severed)
          throw ValidationError("uncut wire " + std::to_string(q) +
                                " crosses fragments between ops " +
                                std::to_string(prev) + " and " +
                                std::to_string(i));
      }
      prev = i;
      has_prev = true;
    }
  }
}

CutPlan plan_bipartition(const Circuit& c, const std::vector<int>& qubits_a,
                         const std::vector<int>& qubits_b, CutMethod method) {
  validate_circuit(c);
  const std::set<int> a(qubits_a.begin(), qubits_a.end());
  const std::set<int> b(qubits_b.begin(), qubits_b.end());
  for (int q = 0; q < c.num_qubits; ++q)
    if (!a.count(q) && !b.count(q))
      throw ValidationError("qubit " + std::to_string(q) +
                            " belongs to neither part");
  std::vector<int> overlap;
  for (int q : a)
    if (b.count(q)) overlap.push_back(q);
  if (overlap.empty()) throw ValidationError("nothing to cut: A and B are disjoint");

  // Trailing measurements belong to neither half.
  std::size_t end = c.ops.size();
  while (end > 0 && std::holds_alternative<MeasureZ>(c.ops[end - 1])) --end;

  auto inside = [](const std::vector<int>& wires, const std::set<int>& part) {
    for (int w : wires)
      if (!part.count(w)) return false;
    return true;
  };

  std::size_t split = 0;
  while (split < end && inside(op_wires(c.ops[split]), a)) ++split;
  for (std::size_t i = split; i < end; ++i) {
    if (!inside(op_wires(c.ops[i]), b))
      throw ValidationError(
          "circuit is not a composition over the given parts: op " +
          std::to_string(i) + " acts outside B after the A prefix");
  }

  CutPlan plan;
  CutGroup group;
  group.position = split;
  group.wires = overlap;
  group.method = method;
  plan.groups.push_back(std::move(group));

  Fragment fa, fb;
  for (std::size_t i = 0; i < split; ++i)
    if (is_gate(c.ops[i])) fa.op_indices.push_back(i);
  for (std::size_t i = split; i < end; ++i)
    if (is_gate(c.ops[i])) fb.op_indices.push_back(i);
  fa.support = support_of(c, fa.op_indices);
  fb.support = support_of(c, fb.op_indices);
  plan.fragments = {std::move(fa), std::move(fb)};
  attach_groups(c, plan);
  validate_plan(c, plan);
  return plan;
}

CutPlan plan_from_groups(const Circuit& c, std::vector<CutGroup> groups) {
  validate_circuit(c);
  check_groups(c, groups);
  const auto gates = gate_indices(c);
  const auto labels = component_labels(c, groups, gates);
  const int nf = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

  CutPlan plan;
  plan.groups = std::move(groups);
  plan.fragments.resize(std::max(nf, 0));
  for (std::size_t i = 0; i < gates.size(); ++i)
    plan.fragments[labels[i]].op_indices.push_back(gates[i]);
  for (auto& f : plan.fragments) f.support = support_of(c, f.op_indices);
  attach_groups(c, plan);
  validate_plan(c, plan);
  return plan;
}

Circuit insert_channel_slots(const Circuit& c, const CutPlan& plan) {
  std::vector<std::size_t> order(plan.groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return plan.groups[x].position < plan.groups[y].position;
  });
  Circuit out;
  out.num_qubits = c.num_qubits;
  std::size_t next = 0;
  for (std::size_t i = 0; i <= c.ops.size(); ++i) {
    while (next < order.size() && plan.groups[order[next]].position == i) {
      out.push_slot(static_cast<int>(order[next]), plan.groups[order[next]].wires);
      ++next;
    }
    if (i < c.ops.size()) out.ops.push_back(c.ops[i]);
  }
  return out;
}

namespace {

// Per-worker estimator context: owns the modified circuit, the per-group
// decompositions, and scratch for one shot.
class CutShotContext {
 public:
  CutShotContext(const Circuit& c, const CutPlan& plan,
                 const DiagonalObservable* obs)
      : modified_(insert_channel_slots(c, plan)),
        plan_(&plan),
        obs_(obs),
        bound_(plan.shot_bound()),
        workspace_(c.num_qubits) {
    validate_circuit(modified_);
    if (modified_.num_qubits > kMaxStatevectorQubits)
      throw ValidationError("cut circuit exceeds the statevector cap");
    for (std::size_t j = 0; j < plan.groups.size(); ++j) {
      if (plan.groups[j].method == CutMethod::Randomized)
        decomps_.push_back(randomized_decomposition(plan.groups[j].width()));
      else
        decomps_.push_back(pauli_decomposition());
      bindings_.emplace(static_cast<int>(j), DepolarizeSlotBinding{});
    }
  }

  double bound() const { return bound_; }

  // One Monte Carlo sample of the signed estimator.
  double run_signed(Rng& rng) {
    double sign = 1.0;
    draw_bindings(rng, &sign);
    run_shot_into(modified_, rng, bindings_, workspace_, shot_);
    sign *= outcome_sign(shot_);
    const double y = obs_->evaluate(shot_.final_bits) * bound_ * sign;
    if (std::abs(y) > bound_ * (1.0 + 1e-12))
      throw NumericalError("shot value exceeded the certainty bound");
    return y;
  }

  // One sign-free sample from the modified circuit's output distribution.
  std::uint64_t run_unsigned(Rng& rng) {
    draw_bindings(rng, nullptr);
    run_shot_into(modified_, rng, bindings_, workspace_, shot_);
    return shot_.final_bits;
  }

 private:
  void draw_bindings(Rng& rng, double* sign) {
    auto it = bindings_.begin();
    for (std::size_t j = 0; j < plan_->groups.size(); ++j, ++it) {
      const CutGroup& g = plan_->groups[j];
      if (g.method == CutMethod::Randomized) {
        const TermDraw draw = sample_term(decomps_[j], rng);
        if (sign) *sign *= draw.sign;
        if (decomps_[j].terms[draw.index].measure == MeasureSpec::CliffordFresh) {
          const CliffordTableau t = sample_uniform_clifford(g.width(), rng);
          it->second = CliffordSlotBinding{tableau_to_unitary(t)};
        } else {
          it->second = DepolarizeSlotBinding{};
        }
      } else {
        PauliSlotBinding pb;
        pb.wire_actions.reserve(g.width());
        for (int w = 0; w < g.width(); ++w) {
          const TermDraw draw = sample_term(decomps_[j], rng);
          const MeasurePrepTerm& term = decomps_[j].terms[draw.index];
          if (sign) *sign *= draw.sign;
          PauliWireAction act;
          switch (term.measure) {
            case MeasureSpec::PauliX: act.axis = PauliAxis::X; break;
            case MeasureSpec::PauliY: act.axis = PauliAxis::Y; break;
            case MeasureSpec::PauliZ: act.axis = PauliAxis::Z; break;
            default: act.axis = PauliAxis::Id; break;
          }
          act.eigen_label = (term.measure == MeasureSpec::TraceOnly)
                                ? (term.fixed_bits ? -1 : +1)
                                : term.eigen_label;
          pb.wire_actions.push_back(act);
        }
        it->second = std::move(pb);
      }
    }
  }

  // Pauli terms weight the estimator by the recorded measurement sign.
  double outcome_sign(const ShotResult& shot) const {
    double s = 1.0;
    for (const auto& rec : shot.slot_records) {
      const auto it = bindings_.find(rec.slot_id);
      const auto* pb = std::get_if<PauliSlotBinding>(&it->second);
      if (!pb) continue;
      for (std::size_t w = 0; w < pb->wire_actions.size(); ++w)
        if (pb->wire_actions[w].axis != PauliAxis::Id &&
            (rec.measured_bits >> w & 1))
          s = -s;
    }
    return s;
  }

  Circuit modified_;
  const CutPlan* plan_;
  const DiagonalObservable* obs_;
  double bound_;
  Statevector workspace_;
  ShotResult shot_;
  std::vector<QuasiDecomposition> decomps_;
  std::map<int, SlotBinding> bindings_;
};

}  // namespace

Estimate estimate(const Circuit& c, const CutPlan& plan,
                  const DiagonalObservable& obs, const ShotOptions& opt) {
  if (opt.shots < 1) throw ValidationError("shot count must be >= 1");
  const std::uint64_t num_blocks =
      (opt.shots + kShotBlockSize - 1) / kShotBlockSize;
  std::vector<double> block_sums(num_blocks, 0.0);
  std::vector<double> block_sq_sums(num_blocks, 0.0);

  run_shot_blocks(opt.shots, opt.workers, [&]() -> BlockFn {
    auto ctx = std::make_shared<CutShotContext>(c, plan, &obs);
    return [&, ctx](const BlockRange& range) {
      double sum = 0.0, sq = 0.0;
      for (std::uint64_t s = range.begin; s < range.end; ++s) {
        Rng rng = make_rng(derive_seed(opt.seed, s));
        const double y = ctx->run_signed(rng);
        sum += y;
        sq += y * y;
      }
      block_sums[range.index] = sum;
      block_sq_sums[range.index] = sq;
    };
  });

  double sum = 0.0, sq = 0.0;
  for (std::uint64_t b = 0; b < num_blocks; ++b) {
    sum += block_sums[b];
    sq += block_sq_sums[b];
  }
  const double n = static_cast<double>(opt.shots);
  Estimate e;
  e.shots = opt.shots;
  e.per_shot_bound = plan.shot_bound();
  e.mean = sum / n;
  const double var = std::max(0.0, (sq - n * e.mean * e.mean) / std::max(1.0, n - 1.0));
  e.sample_variance = var;
  e.std_error = std::sqrt(var / n);
  return e;
}

std::vector<std::uint64_t> sample_cut(const Circuit& c, const CutPlan& plan,
                                      const ShotOptions& opt) {
  if (opt.shots < 1) throw ValidationError("shot count must be >= 1");
  std::vector<std::uint64_t> out(opt.shots, 0);
  run_shot_blocks(opt.shots, opt.workers, [&]() -> BlockFn {
    auto ctx = std::make_shared<CutShotContext>(c, plan, nullptr);
    return [&, ctx](const BlockRange& range) {
      for (std::uint64_t s = range.begin; s < range.end; ++s) {
        Rng rng = make_rng(derive_seed(opt.seed, s));
        out[s] = ctx->run_unsigned(rng);
      }
    };
  });
  return out;
}

namespace {

void require_randomized(const CutPlan& plan) {
  for (const auto& g : plan.groups)
    if (g.method != CutMethod::Randomized)
      throw ValidationError("exact cut evaluation supports the randomized method only");
}

}  // namespace

double exact_cut_expectation(const Circuit& c, const CutPlan& plan,
                             const DiagonalObservable& obs) {
  require_randomized(plan);
  const std::size_t l = plan.groups.size();
  if (l > kMaxEnumeratedCutGroups)
    throw ValidationError("too many cut groups for exact enumeration");
  const Circuit modified = insert_channel_slots(c, plan);

  // Signed branch enumeration: assignment z carries the weight product of
  // (d_j + 1) for kept groups and -d_j for depolarized ones, which is the
  // branch probability times (2d_j + 1)(-1)^{z_j}.
  double acc = 0.0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << l); ++z) {
    std::map<int, Superoperator> bindings;
    double weight = 1.0;
    for (std::size_t j = 0; j < l; ++j) {
      const int d = 1 << plan.groups[j].width();
      if (z >> j & 1) {
        bindings.emplace(static_cast<int>(j), psi1_superop(d));
        weight *= -static_cast<double>(d);
      } else {
        bindings.emplace(static_cast<int>(j), psi0_superop(d));
        weight *= static_cast<double>(d + 1);
      }
    }
    const DensityMatrix rho = run_density(modified, bindings);
    acc += weight * density_expectation(rho, obs);
  }
  return acc;
}

std::vector<double> exact_qtilde(const Circuit& c, const CutPlan& plan) {
  require_randomized(plan);
  const Circuit modified = insert_channel_slots(c, plan);
  std::map<int, Superoperator> bindings;
  for (std::size_t j = 0; j < plan.groups.size(); ++j)
    bindings.emplace(static_cast<int>(j),
                     unsigned_cut_mixture_superop(1 << plan.groups[j].width()));
  return run_density(modified, bindings).diagonal_probabilities();
}

std::string plan_to_json(const CutPlan& plan) {
  json out;
  out["groups"] = json::array();
  for (const auto& g : plan.groups) {
    json o;
    o["position"] = g.position;
    o["wires"] = g.wires;
    o["method"] = cut_method_name(g.method);
    out["groups"].push_back(std::move(o));
  }
  return out.dump(2);
}

CutPlan plan_from_json(const std::string& text, const Circuit& c) {
  json in = json::parse(text);
  std::vector<CutGroup> groups;
  for (const auto& o : in.at("groups")) {
    CutGroup g;
    g.position = o.at("position").get<std::size_t>();
    g.wires = o.at("wires").get<std::vector<int>>();
    g.method = cut_method_from_name(o.at("method").get<std::string>());
    groups.push_back(std::move(g));
  }
  return plan_from_groups(c, std::move(groups));
}

std::string estimate_to_json(const Estimate& e) {
  json out;
  out["mean"] = e.mean;
  out["stderr"] = e.std_error;
  out["shots"] = e.shots;
  out["bound"] = e.per_shot_bound;
  return out.dump(2);
}

}  // namespace qcut
