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

#include "qcut/circuit.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "qcut/config.hpp"

namespace qcut {

using nlohmann::json;

bool gate_has_angle(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
      return true;
    default:
      return false;
  }
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::RZZ:
    case GateKind::CNOT:
    case GateKind::CZ:
      return 2;
    default:
      return 1;
  }
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::RZZ: return "rzz";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
  }
  return "?";
}

GateKind gate_from_name(const std::string& name) {
  static const std::vector<GateKind> all = {
      GateKind::H,  GateKind::X,  GateKind::Y,   GateKind::Z,
      GateKind::S,  GateKind::Sdg, GateKind::RX, GateKind::RY,
      GateKind::RZ, GateKind::RZZ, GateKind::CNOT, GateKind::CZ};
  for (GateKind k : all)
    if (gate_name(k) == name) return k;
  throw ValidationError("unknown gate name: " + name);
}

const std::vector<int>& op_wires(const CircuitOp& op) {
  return std::visit([](const auto& o) -> const std::vector<int>& { return o.wires; },
                    op);
}

void Circuit::push_gate(GateKind kind, std::vector<int> wires, double angle) {
  ops.push_back(Gate{kind, angle, std::move(wires)});
}

void Circuit::push_measure(std::vector<int> wires, std::string tag) {
  ops.push_back(MeasureZ{std::move(wires), std::move(tag)});
}

void Circuit::push_prepare(std::vector<int> wires, std::string source_tag) {
  ops.push_back(PrepareBasis{std::move(wires), std::move(source_tag)});
}

void Circuit::push_slot(int slot_id, std::vector<int> wires) {
  ops.push_back(ChannelSlot{slot_id, std::move(wires)});
}

bool Circuit::has_channel_slots() const {
  for (const auto& op : ops)
    if (std::holds_alternative<ChannelSlot>(op)) return true;
  return false;
}

bool Circuit::has_mid_circuit_ops() const {
  if (has_channel_slots()) return true;
  for (const auto& op : ops)
    if (std::holds_alternative<PrepareBasis>(op)) return true;
  return !measurements_terminal();
}

bool Circuit::measurements_terminal() const {
  bool seen_measure = false;
  for (const auto& op : ops) {
    if (std::holds_alternative<MeasureZ>(op)) {
      seen_measure = true;
    } else if (seen_measure) {
      return false;
    }
  }
  return true;
}

void validate_circuit(const Circuit& c) {
  if (c.num_qubits < 1 || c.num_qubits > 64)
    throw ValidationError("circuit qubit count out of range");
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto& wires = op_wires(c.ops[i]);
    if (wires.empty())
      throw ValidationError("op " + std::to_string(i) + " has no wires");
    std::uint64_t seen = 0;
    for (int w : wires) {
      if (w < 0 || w >= c.num_qubits)
        throw ValidationError("op " + std::to_string(i) + " wire " +
                              std::to_string(w) + " out of range");
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (seen & bit)
        throw ValidationError("op " + std::to_string(i) + " repeats wire " +
                              std::to_string(w));
      seen |= bit;
    }
    if (const auto* g = std::get_if<Gate>(&c.ops[i])) {
      if (static_cast<int>(g->wires.size()) != gate_arity(g->kind))
        throw ValidationError("op " + std::to_string(i) + " (" +
                              gate_name(g->kind) + ") has wrong arity");
      if (!gate_has_angle(g->kind) && g->angle != 0.0)
        throw ValidationError("op " + std::to_string(i) +
                              " carries an angle on a non-rotation gate");
    }
  }
}

Matrix gate_matrix(const Gate& g) {
  const Complex i(0.0, 1.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  Matrix m;
  switch (g.kind) {
    case GateKind::H:
      m = Matrix{{r2, r2}, {r2, -r2}};
      break;
    case GateKind::X:
      m = Matrix{{0, 1}, {1, 0}};
      break;
    case GateKind::Y:
      m = Matrix{{0, -i}, {i, 0}};
      break;
    case GateKind::Z:
      m = Matrix{{1, 0}, {0, -1}};
      break;
    case GateKind::S:
      m = Matrix{{1, 0}, {0, i}};
      break;
    case GateKind::Sdg:
      m = Matrix{{1, 0}, {0, -i}};
      break;
    case GateKind::RX: {
      double h = g.angle / 2.0;
      m = Matrix{{std::cos(h), -i * std::sin(h)}, {-i * std::sin(h), std::cos(h)}};
      break;
    }
    case GateKind::RY: {
      double h = g.angle / 2.0;
      m = Matrix{{std::cos(h), -std::sin(h)}, {std::sin(h), std::cos(h)}};
      break;
    }
    case GateKind::RZ: {
      double h = g.angle / 2.0;
      m = Matrix::Zero(2, 2);
      m(0, 0) = std::exp(-i * h);
      m(1, 1) = std::exp(i * h);
      break;
    }
    case GateKind::RZZ: {
      // exp(-i theta/2 Z(x)Z): diagonal phase by the parity of the two bits
      double h = g.angle / 2.0;
      m = Matrix::Zero(4, 4);
      m(0, 0) = std::exp(-i * h);
      m(1, 1) = std::exp(i * h);
      m(2, 2) = std::exp(i * h);
      m(3, 3) = std::exp(-i * h);
      break;
    }
    case GateKind::CNOT: {
      // wires[0] = control (bit 0 of the index), wires[1] = target
      m = Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;
      m(1, 3) = 1;
      break;
    }
    case GateKind::CZ: {
      m = Matrix::Identity(4, 4);
      m(3, 3) = -1;
      break;
    }
  }
  return m;
}

std::string circuit_to_json(const Circuit& c) {
  json out;
  out["num_qubits"] = c.num_qubits;
  out["ops"] = json::array();
  for (const auto& op : c.ops) {
    json o;
    if (const auto* g = std::get_if<Gate>(&op)) {
      o["type"] = gate_name(g->kind);
      o["wires"] = g->wires;
      if (gate_has_angle(g->kind)) o["angle"] = g->angle;
    } else if (const auto* m = std::get_if<MeasureZ>(&op)) {
      o["type"] = "measure_z";
      o["wires"] = m->wires;
      if (!m->tag.empty()) o["tag"] = m->tag;
    } else if (const auto* p = std::get_if<PrepareBasis>(&op)) {
      o["type"] = "prepare_basis";
      o["wires"] = p->wires;
      o["tag"] = p->source_tag;
    } else if (const auto* s = std::get_if<ChannelSlot>(&op)) {
      o["type"] = "channel_slot";
      o["wires"] = s->wires;
      o["slot"] = s->slot_id;
    }
    out["ops"].push_back(std::move(o));
  }
  return out.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  json in = json::parse(text);
  Circuit c;
  c.num_qubits = in.at("num_qubits").get<int>();
  for (const auto& o : in.at("ops")) {
    std::string type = o.at("type").get<std::string>();
    std::vector<int> wires = o.at("wires").get<std::vector<int>>();
    if (type == "measure_z") {
      c.push_measure(std::move(wires), o.value("tag", std::string{}));
    } else if (type == "prepare_basis") {
      c.push_prepare(std::move(wires), o.at("tag").get<std::string>());
    } else if (type == "channel_slot") {
      c.push_slot(o.at("slot").get<int>(), std::move(wires));
    } else {
      GateKind k = gate_from_name(type);
      double angle = gate_has_angle(k) ? o.at("angle").get<double>() : 0.0;
      c.push_gate(k, std::move(wires), angle);
    }
  }
  validate_circuit(c);
  return c;
}

}  // namespace qcut
