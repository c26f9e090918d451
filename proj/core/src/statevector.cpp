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

#include "qcut/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "qcut/config.hpp"

namespace qcut {

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxStatevectorQubits)
    throw ValidationError("statevector size " + std::to_string(num_qubits) +
                          " outside [1, " +
                          std::to_string(kMaxStatevectorQubits) + "]");
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

void Statevector::reset_to_zero() {
  std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

void Statevector::apply_single(const Complex u[2][2], int wire) {
  const std::uint64_t step = std::uint64_t{1} << wire;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t base = 0; base < n; base += 2 * step) {
    for (std::uint64_t off = 0; off < step; ++off) {
      const std::uint64_t i0 = base + off;
      const std::uint64_t i1 = i0 + step;
      const Complex a0 = amps_[i0];
      const Complex a1 = amps_[i1];
      amps_[i0] = u[0][0] * a0 + u[0][1] * a1;
      amps_[i1] = u[1][0] * a0 + u[1][1] * a1;
    }
  }
}

void Statevector::apply_cnot(int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void Statevector::apply_cz(int a, int b) {
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void Statevector::apply_rzz(double theta, int a, int b) {
  const Complex minus = std::exp(Complex{0.0, -theta / 2.0});
  const Complex plus = std::exp(Complex{0.0, theta / 2.0});
  const std::uint64_t abit = std::uint64_t{1} << a;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    const bool parity = ((i & abit) != 0) != ((i & bbit) != 0);
    amps_[i] *= parity ? plus : minus;
  }
}

void Statevector::apply_gate(const Gate& g) {
  for (int w : g.wires)
    if (w < 0 || w >= num_qubits_)
      throw ValidationError("gate wire " + std::to_string(w) + " out of range");
  const double r2 = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::H: {
      const Complex u[2][2] = {{r2, r2}, {r2, -r2}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::X: {
      const Complex u[2][2] = {{0, 1}, {1, 0}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::Y: {
      const Complex u[2][2] = {{0, -i}, {i, 0}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::Z: {
      const Complex u[2][2] = {{1, 0}, {0, -1}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::S: {
      const Complex u[2][2] = {{1, 0}, {0, i}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::Sdg: {
      const Complex u[2][2] = {{1, 0}, {0, -i}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::RX: {
      const double h = g.angle / 2.0;
      const Complex u[2][2] = {{std::cos(h), -i * std::sin(h)},
                               {-i * std::sin(h), std::cos(h)}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::RY: {
      const double h = g.angle / 2.0;
      const Complex u[2][2] = {{std::cos(h), -std::sin(h)},
                               {std::sin(h), std::cos(h)}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::RZ: {
      const double h = g.angle / 2.0;
      const Complex u[2][2] = {{std::exp(-i * h), 0}, {0, std::exp(i * h)}};
      apply_single(u, g.wires[0]);
      break;
    }
    case GateKind::RZZ:
      apply_rzz(g.angle, g.wires[0], g.wires[1]);
      break;
    case GateKind::CNOT:
      apply_cnot(g.wires[0], g.wires[1]);
      break;
    case GateKind::CZ:
      apply_cz(g.wires[0], g.wires[1]);
      break;
  }
}

void Statevector::apply_unitary(const Matrix& u, std::span<const int> wires) {
  const int k = static_cast<int>(wires.size());
  const std::uint64_t d = std::uint64_t{1} << k;
  if (u.rows() != static_cast<Eigen::Index>(d) ||
      u.cols() != static_cast<Eigen::Index>(d))
    throw ValidationError("unitary dimension does not match wire count");

  // Enumerate the complement space once; gather/scatter per block.
  std::uint64_t wire_mask = 0;
  for (int w : wires) wire_mask |= std::uint64_t{1} << w;
  std::vector<std::uint64_t> offsets(d, 0);
  for (std::uint64_t b = 0; b < d; ++b) {
    std::uint64_t off = 0;
    for (int j = 0; j < k; ++j)
      if (b & (std::uint64_t{1} << j)) off |= std::uint64_t{1} << wires[j];
    offsets[b] = off;
  }
  std::vector<Complex> in(d), out(d);
  const std::uint64_t n = amps_.size();
  for (std::uint64_t base = 0; base < n; ++base) {
    if (base & wire_mask) continue;  // base iterates the complement space
    for (std::uint64_t b = 0; b < d; ++b) in[b] = amps_[base | offsets[b]];
    for (std::uint64_t r = 0; r < d; ++r) {
      Complex acc{0.0, 0.0};
      for (std::uint64_t cidx = 0; cidx < d; ++cidx) acc += u(r, cidx) * in[cidx];
      out[r] = acc;
    }
    for (std::uint64_t b = 0; b < d; ++b) amps_[base | offsets[b]] = out[b];
  }
}

std::uint64_t Statevector::measure_collapse(std::span<const int> wires,
                                            Rng& rng) {
  const int k = static_cast<int>(wires.size());
  const std::uint64_t d = std::uint64_t{1} << k;
  const std::uint64_t n = amps_.size();

  // Full-register measurement in wire order needs no bit gathering.
  bool identity_map = (k == num_qubits_);
  for (int j = 0; identity_map && j < k; ++j) identity_map = (wires[j] == j);

  if (identity_map) {
    double total = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) total += std::norm(amps_[i]);
    if (std::abs(total - 1.0) > 1e-6)
      throw NumericalError("measurement probabilities sum to " +
                           std::to_string(total));
    const double u = uniform_unit(rng) * total;
    double acc = 0.0;
    std::uint64_t outcome = n - 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      acc += std::norm(amps_[i]);
      if (u < acc) {
        outcome = i;
        break;
      }
    }
    const double p = std::norm(amps_[outcome]);
    if (p <= tol().zero_branch)
      throw NumericalError("collapse on zero-probability branch");
    std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0});
    amps_[outcome] = 1.0;
    return outcome;
  }

  std::vector<double> probs(d, 0.0);
  std::uint64_t wire_bit[64];
  for (int j = 0; j < k; ++j) wire_bit[j] = std::uint64_t{1} << wires[j];
  for (std::uint64_t i = 0; i < n; ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::uint64_t out = 0;
    for (int j = 0; j < k; ++j)
      if (i & wire_bit[j]) out |= std::uint64_t{1} << j;
    probs[out] += p;
  }
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > 1e-6)
    throw NumericalError("measurement probabilities sum to " +
                         std::to_string(total));

  const double u = uniform_unit(rng) * total;
  double acc = 0.0;
  std::uint64_t outcome = d - 1;
  for (std::uint64_t o = 0; o < d; ++o) {
    acc += probs[o];
    if (u < acc) {
      outcome = o;
      break;
    }
  }
  if (probs[outcome] <= tol().zero_branch)
    throw NumericalError("collapse on zero-probability branch");

  // Project and renormalize.
  const double inv = 1.0 / std::sqrt(probs[outcome]);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t out = 0;
    for (int j = 0; j < k; ++j)
      if (i & wire_bit[j]) out |= std::uint64_t{1} << j;
    amps_[i] = (out == outcome) ? amps_[i] * inv : Complex{0.0, 0.0};
  }
  return outcome;
}

void Statevector::set_collapsed_wires(std::span<const int> wires,
                                      std::uint64_t bits, bool verify) {
  const std::uint64_t n = amps_.size();
  std::uint64_t current = 0;
  bool found = false;
  std::uint64_t wire_mask = 0;
  for (int w : wires) wire_mask |= std::uint64_t{1} << w;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (std::norm(amps_[i]) == 0.0) continue;
    std::uint64_t bitsn = 0;
    for (std::size_t j = 0; j < wires.size(); ++j)
      if (i & (std::uint64_t{1} << wires[j])) bitsn |= std::uint64_t{1} << j;
    if (!found) {
      current = bitsn;
      found = true;
      if (!verify) break;
    } else if (bitsn != current) {
      throw ValidationError("prepare on wires that are not collapsed");
    }
  }
  if (!found) throw NumericalError("prepare on a zero state");

  // Flip the wires whose bit differs; a permutation of the amplitudes.
  const std::uint64_t diff = current ^ bits;
  std::uint64_t flip_mask = 0;
  for (std::size_t j = 0; j < wires.size(); ++j)
    if (diff & (std::uint64_t{1} << j)) flip_mask |= std::uint64_t{1} << wires[j];
  if (flip_mask == 0) return;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t j = i ^ flip_mask;
    if (j > i) std::swap(amps_[i], amps_[j]);
  }
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

namespace {

// Shared driver for the two exact read-outs below.
Statevector run_unitary_part(const Circuit& c) {
  validate_circuit(c);
  if (c.num_qubits > kMaxStatevectorQubits)
    throw ValidationError("circuit exceeds the statevector cap");
  if (c.has_channel_slots())
    throw ValidationError("exact evaluation requires a slot-free circuit");
  if (!c.measurements_terminal())
    throw ValidationError("exact evaluation requires terminal measurements only");
  Statevector sv(c.num_qubits);
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate>(&op)) sv.apply_gate(*g);
    else if (std::holds_alternative<PrepareBasis>(op))
      throw ValidationError("exact evaluation does not support PrepareBasis");
  }
  const double drift = std::abs(sv.norm_squared() - 1.0);
  if (drift > tol().state_norm)
    throw NumericalError("state norm drifted by " + std::to_string(drift));
  return sv;
}

}  // namespace

double exact_expectation(const Circuit& c, const DiagonalObservable& obs) {
  Statevector sv = run_unitary_part(c);
  double acc = 0.0;
  const std::uint64_t n = sv.size();
  for (std::uint64_t x = 0; x < n; ++x) {
    const double p = std::norm(sv.amplitude(x));
    if (p > 0.0) acc += p * obs.evaluate(x);
  }
  return acc;
}

std::vector<double> exact_distribution(const Circuit& c) {
  return run_unitary_part(c).probabilities();
}

}  // namespace qcut
