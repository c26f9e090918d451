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

#ifndef QCUT_SHOT_RUNNER_HPP
#define QCUT_SHOT_RUNNER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/rng.hpp"
#include "qcut/statevector.hpp"

namespace qcut {

// Concrete measure-and-prepare realizations bound to channel slots for a
// single shot.

enum class PauliAxis { Id, X, Y, Z };

/// Rotate by V^dag, measure, re-prepare the outcome, rotate back by V.
struct CliffordSlotBinding {
  Matrix v;
};

/// Measure and discard, then re-prepare a uniformly random basis state.
struct DepolarizeSlotBinding {};

/// Per-wire Pauli-basis measurement followed by eigenstate preparation.
/// Id means trace-only measurement with a fixed |0>/|1> preparation.
struct PauliWireAction {
  PauliAxis axis = PauliAxis::Id;
  int eigen_label = +1;  // which eigenstate gets prepared
};

struct PauliSlotBinding {
  std::vector<PauliWireAction> wire_actions;  // one per slot wire
};

using SlotBinding =
    std::variant<CliffordSlotBinding, DepolarizeSlotBinding, PauliSlotBinding>;

struct SlotRecord {
  int slot_id = 0;
  std::uint64_t measured_bits = 0;  // packed in slot wire order
  std::uint64_t prepared_bits = 0;
};

struct MeasureRecord {
  std::string tag;
  std::uint64_t bits = 0;  // packed in the op's wire order
};

struct ShotResult {
  std::uint64_t final_bits = 0;  // packed by wire index
  std::vector<SlotRecord> slot_records;
  std::vector<MeasureRecord> measure_records;
};

/// Executes the circuit once: gates apply in order, measurements collapse by
/// the Born rule, channel slots dispatch on their binding. The circuit must
/// contain at least one MeasureZ; outcomes of terminal measurements are
/// packed into `final_bits` by wire index.
ShotResult run_shot(const Circuit& c, Rng& rng,
                    const std::map<int, SlotBinding>& bindings);

/// Hot-loop variant: skips validation (the caller has already validated the
/// circuit) and reuses the given workspace and result buffers.
void run_shot_into(const Circuit& c, Rng& rng,
                   const std::map<int, SlotBinding>& bindings, Statevector& sv,
                   ShotResult& out);

}  // namespace qcut

#endif  // QCUT_SHOT_RUNNER_HPP
