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

#ifndef QCUT_CUTTING_HPP
#define QCUT_CUTTING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/observable.hpp"
#include "qcut/rng.hpp"

namespace qcut {

enum class CutMethod { Randomized, Pauli };

std::string cut_method_name(CutMethod m);
CutMethod cut_method_from_name(const std::string& name);

/// A set of wires cut together by one vertical line through the op list:
/// the identity on those wires is replaced by a channel inserted before
/// ops[position].
struct CutGroup {
  std::size_t position = 0;
  std::vector<int> wires;
  CutMethod method = CutMethod::Randomized;

  int width() const { return static_cast<int>(wires.size()); }
  /// One-norm of the group's decomposition: 2^{k+1}+1 or 4^k.
  double scale() const;
};

/// A set of gates that stays connected after all cuts are applied, plus the
/// cut groups feeding into / out of it.
struct Fragment {
  std::vector<std::size_t> op_indices;  // gate ops only, ascending
  std::vector<int> support;             // sorted qubit set
  std::vector<int> incoming_groups;     // groups whose preparation lands here
  std::vector<int> outgoing_groups;     // groups measured out of here
};

struct CutPlan {
  std::vector<CutGroup> groups;
  std::vector<Fragment> fragments;
  /// True when the fragment communication graph is acyclic, i.e. the plan
  /// could run on one device by recycling qubits. Cycles are fine here
  /// (everything is co-simulated) but are worth knowing about.
  bool single_device_recyclable = true;

  int total_cut_wires() const;
  /// Product of group scales; every shot value is bounded by this.
  double shot_bound() const;
  int max_fragment_width() const;
};

/// Checks that the fragments partition the gate ops and that no uncut wire
/// connects two different fragments. Throws ValidationError otherwise.
void validate_plan(const Circuit& c, const CutPlan& plan);

/// Fills the fragment/group attachments and the recyclability flag of a
/// plan whose groups and fragments are already set, then validates it.
void finalize_plan(const Circuit& c, CutPlan& plan);

/// Builds the one-group plan for a circuit that is a composition of a
/// prefix acting inside A and a suffix acting inside B (trailing
/// measurements excluded). The group is placed at the prefix/suffix
/// boundary on wires A iff B.
CutPlan plan_bipartition(const Circuit& c, const std::vector<int>& qubits_a,
                         const std::vector<int>& qubits_b,
                         CutMethod method = CutMethod::Randomized);

/// Connected-component fragments for an externally specified set of groups
/// (used when loading plans from files).
CutPlan plan_from_groups(const Circuit& c, std::vector<CutGroup> groups);

/// Copy of the circuit with a ChannelSlot op inserted for every group
/// (slot_id = group index). Positions shift accordingly.
Circuit insert_channel_slots(const Circuit& c, const CutPlan& plan);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
  double per_shot_bound = 0.0;
  double sample_variance = 0.0;
};

struct ShotOptions {
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// Monte Carlo cut estimator: per shot, draws a branch per group, executes
/// the modified circuit, and weights f(final bits) by the product of group
/// scales and signs. Results depend only on (seed, shots), never on the
/// worker count.
Estimate estimate(const Circuit& c, const CutPlan& plan,
                  const DiagonalObservable& obs, const ShotOptions& opt);

/// Exact value of the cut estimator by enumerating all branch assignments
/// z in {0,1}^groups with signed weights (d_j+1) / -d_j and evaluating each
/// assignment on the density simulator. Randomized method only.
double exact_cut_expectation(const Circuit& c, const CutPlan& plan,
                             const DiagonalObservable& obs);

/// Terminal bitstrings of the modified circuit with branches sampled at
/// their true probabilities and all signs/scales discarded.
std::vector<std::uint64_t> sample_cut(const Circuit& c, const CutPlan& plan,
                                      const ShotOptions& opt);

/// Exact sign-free output distribution of the cut circuit: every slot is
/// bound to the probability-weighted channel mixture. Randomized only.
std::vector<double> exact_qtilde(const Circuit& c, const CutPlan& plan);

// Plan serialization: {"groups":[{"position":p,"wires":[...],"method":m}]}.
// Fragments are recomputed against the circuit on load.
std::string plan_to_json(const CutPlan& plan);
CutPlan plan_from_json(const std::string& text, const Circuit& c);

std::string estimate_to_json(const Estimate& e);

}  // namespace qcut

#endif  // QCUT_CUTTING_HPP
