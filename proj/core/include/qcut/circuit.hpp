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

#ifndef QCUT_CIRCUIT_HPP
#define QCUT_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qcut/linalg.hpp"

namespace qcut {

enum class GateKind { H, X, Y, Z, S, Sdg, RX, RY, RZ, RZZ, CNOT, CZ };

bool gate_has_angle(GateKind k);
int gate_arity(GateKind k);
std::string gate_name(GateKind k);
GateKind gate_from_name(const std::string& name);

/// Unitary gate on one or two wires.
struct Gate {
  GateKind kind;
  double angle = 0.0;
  std::vector<int> wires;
};

/// Computational-basis measurement of `wires`, outcome recorded under `tag`.
struct MeasureZ {
  std::vector<int> wires;
  std::string tag;
};

/// Resets `wires` to the basis state previously recorded under `source_tag`.
/// Only valid when the wires are already in a definite basis state (i.e.
/// right after a measurement collapse).
struct PrepareBasis {
  std::vector<int> wires;
  std::string source_tag;
};

/// Placeholder for a channel to be bound at execution time. The wire set is
/// cut-parallel at this position by construction of the op list.
struct ChannelSlot {
  int slot_id = 0;
  std::vector<int> wires;
};

using CircuitOp = std::variant<Gate, MeasureZ, PrepareBasis, ChannelSlot>;

const std::vector<int>& op_wires(const CircuitOp& op);

struct Circuit {
  int num_qubits = 0;
  std::vector<CircuitOp> ops;

  void push_gate(GateKind kind, std::vector<int> wires, double angle = 0.0);
  void push_measure(std::vector<int> wires, std::string tag = "");
  void push_prepare(std::vector<int> wires, std::string source_tag);
  void push_slot(int slot_id, std::vector<int> wires);

  bool has_channel_slots() const;
  bool has_mid_circuit_ops() const;
  /// True if every MeasureZ comes after every gate/slot/prepare.
  bool measurements_terminal() const;
};

/// Checks wire ranges, gate arities, duplicate wires, and angle presence.
/// Throws ValidationError with the index of the offending op.
void validate_circuit(const Circuit& c);

// 2^a x 2^a matrix of a gate, wires in ascending significance order
// (wires[0] = least significant index bit of the returned matrix).
Matrix gate_matrix(const Gate& g);

// JSON format contract:
//   {"num_qubits": n,
//    "ops": [{"type": "h"|...|"rzz"|"cnot"|"cz"|"measure_z"|"prepare_basis"
//                    |"channel_slot",
//             "wires": [...],
//             "angle": <number, rotation gates only>,
//             "slot": <int, channel_slot only>,
//             "tag": <string, measure_z / prepare_basis only>}]}
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace qcut

#endif  // QCUT_CIRCUIT_HPP
