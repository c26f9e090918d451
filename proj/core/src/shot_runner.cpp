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

#include "qcut/shot_runner.hpp"

#include <cmath>

#include "qcut/config.hpp"

namespace qcut {

namespace {

// Basis-change unitary B with B|0>, B|1> the +1/-1 eigenstates of the axis.
// Measuring in the axis basis = apply B^dag, measure Z; preparing the
// e-eigenstate = set the bit, apply B.
Matrix axis_basis(PauliAxis axis) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  switch (axis) {
    case PauliAxis::X:
      return Matrix{{r2, r2}, {r2, -r2}};  // H
    case PauliAxis::Y:
      return Matrix{{r2, r2}, {i * r2, -i * r2}};  // S H
    default:
      return Matrix::Identity(2, 2);
  }
}

struct TerminalInfo {
  std::size_t first_terminal = 0;  // index of the first trailing MeasureZ
  bool any_measure = false;
};

TerminalInfo scan_measurements(const Circuit& c) {
  TerminalInfo info;
  info.first_terminal = c.ops.size();
  for (std::size_t i = c.ops.size(); i-- > 0;) {
    if (std::holds_alternative<MeasureZ>(c.ops[i]))
      info.first_terminal = i;
    else
      break;
  }
  for (const auto& op : c.ops)
    if (std::holds_alternative<MeasureZ>(op)) info.any_measure = true;
  return info;
}

}  // namespace

ShotResult run_shot(const Circuit& c, Rng& rng,
                    const std::map<int, SlotBinding>& bindings) {
  validate_circuit(c);
  Statevector sv(c.num_qubits);
  ShotResult result;
  run_shot_into(c, rng, bindings, sv, result);
  return result;
}

void run_shot_into(const Circuit& c, Rng& rng,
                   const std::map<int, SlotBinding>& bindings, Statevector& sv,
                   ShotResult& result) {
  const TerminalInfo term = scan_measurements(c);
  if (!term.any_measure)
    throw ValidationError("no terminal measurement in circuit");

  sv.reset_to_zero();
  result.final_bits = 0;
  result.slot_records.clear();
  result.measure_records.clear();
  std::map<std::string, std::pair<std::vector<int>, std::uint64_t>> recorded;

  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto& op = c.ops[i];
    if (const auto* g = std::get_if<Gate>(&op)) {
      sv.apply_gate(*g);
    } else if (const auto* m = std::get_if<MeasureZ>(&op)) {
      const std::uint64_t bits = sv.measure_collapse(m->wires, rng);
      if (!m->tag.empty()) recorded[m->tag] = {m->wires, bits};
      result.measure_records.push_back(MeasureRecord{m->tag, bits});
      if (i >= term.first_terminal) {
        for (std::size_t j = 0; j < m->wires.size(); ++j)
          if (bits >> j & 1)
            result.final_bits |= std::uint64_t{1} << m->wires[j];
      }
    } else if (const auto* p = std::get_if<PrepareBasis>(&op)) {
      auto it = recorded.find(p->source_tag);
      if (it == recorded.end())
        throw ValidationError("prepare references unknown tag '" +
                              p->source_tag + "'");
      if (it->second.first.size() != p->wires.size())
        throw ValidationError("prepare width does not match recorded tag '" +
                              p->source_tag + "'");
      sv.set_collapsed_wires(p->wires, it->second.second, /*verify=*/true);
    } else if (const auto* slot = std::get_if<ChannelSlot>(&op)) {
      auto it = bindings.find(slot->slot_id);
      if (it == bindings.end())
        throw ValidationError("unbound channel slot " +
                              std::to_string(slot->slot_id));
      SlotRecord rec;
      rec.slot_id = slot->slot_id;
      if (const auto* cb = std::get_if<CliffordSlotBinding>(&it->second)) {
        // Measure in the rotated basis, re-prepare the observed outcome,
        // rotate back: the post-slot state is V|y> on the cut wires.
        sv.apply_unitary(cb->v.adjoint(), slot->wires);
        rec.measured_bits = sv.measure_collapse(slot->wires, rng);
        rec.prepared_bits = rec.measured_bits;
        sv.apply_unitary(cb->v, slot->wires);
      } else if (std::holds_alternative<DepolarizeSlotBinding>(it->second)) {
        rec.measured_bits = sv.measure_collapse(slot->wires, rng);
        rec.prepared_bits =
            uniform_bits(rng, static_cast<int>(slot->wires.size()));
        sv.set_collapsed_wires(slot->wires, rec.prepared_bits);
      } else {
        const auto& pb = std::get<PauliSlotBinding>(it->second);
        if (pb.wire_actions.size() != slot->wires.size())
          throw ValidationError("pauli binding width mismatch at slot " +
                                std::to_string(slot->slot_id));
        for (std::size_t w = 0; w < slot->wires.size(); ++w) {
          const PauliWireAction& act = pb.wire_actions[w];
          const int wire = slot->wires[w];
          const int wires1[1] = {wire};
          const Matrix basis = axis_basis(act.axis);
          if (act.axis != PauliAxis::Id)
            sv.apply_unitary(basis.adjoint(), wires1);
          const std::uint64_t bit = sv.measure_collapse(wires1, rng);
          rec.measured_bits |= bit << w;
          const std::uint64_t target = act.eigen_label == +1 ? 0 : 1;
          rec.prepared_bits |= target << w;
          sv.set_collapsed_wires(wires1, target);
          if (act.axis != PauliAxis::Id) sv.apply_unitary(basis, wires1);
        }
      }
      result.slot_records.push_back(std::move(rec));
    }
  }
}

}  // namespace qcut
