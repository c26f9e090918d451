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

#ifndef QCUT_STATEVECTOR_HPP
#define QCUT_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/linalg.hpp"
#include "qcut/observable.hpp"
#include "qcut/rng.hpp"

namespace qcut {

/// Dense amplitude vector over n qubits. Qubit 0 is the least-significant
/// bit of basis-state indices.
class Statevector {
 public:
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  Complex amplitude(std::uint64_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  void reset_to_zero();         // |0...0>
  double norm_squared() const;  // should stay 1 under unitary evolution

  void apply_gate(const Gate& g);

  /// Applies a dense 2^k x 2^k unitary to the given wires. wires[0] is the
  /// least-significant bit of the matrix index.
  void apply_unitary(const Matrix& u, std::span<const int> wires);

  /// Born-rule measurement of `wires`; collapses and renormalizes.
  /// Returned bits are packed with wires[0] as bit 0.
  std::uint64_t measure_collapse(std::span<const int> wires, Rng& rng);

  /// Moves collapsed wires from their current basis value to `bits`.
  /// When `verify` is set, first checks the wires really are collapsed.
  void set_collapsed_wires(std::span<const int> wires, std::uint64_t bits,
                           bool verify = false);

  std::vector<double> probabilities() const;

 private:
  int num_qubits_;
  std::vector<Complex> amps_;

  void apply_single(const Complex u[2][2], int wire);
  void apply_cnot(int control, int target);
  void apply_cz(int a, int b);
  void apply_rzz(double theta, int a, int b);
};

/// Runs all gates of a slot-free circuit (MeasureZ allowed only terminally)
/// and returns sum_x |psi_x|^2 f(x). Throws above the statevector cap.
double exact_expectation(const Circuit& c, const DiagonalObservable& obs);

/// Exact output distribution of a slot-free circuit.
std::vector<double> exact_distribution(const Circuit& c);

}  // namespace qcut

#endif  // QCUT_STATEVECTOR_HPP
