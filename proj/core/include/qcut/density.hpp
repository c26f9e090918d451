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

#ifndef QCUT_DENSITY_HPP
#define QCUT_DENSITY_HPP

#include <map>
#include <span>

#include "qcut/circuit.hpp"
#include "qcut/observable.hpp"
#include "qcut/superop.hpp"

namespace qcut {

/// Dense 2^n x 2^n density operator. Same bit convention as Statevector.
class DensityMatrix {
 public:
  explicit DensityMatrix(int num_qubits);  // |0..0><0..0|

  int num_qubits() const { return num_qubits_; }
  const Matrix& matrix() const { return rho_; }
  Matrix& matrix() { return rho_; }

  double trace_real() const;
  bool is_hermitian(double tolerance) const;
  double min_eigenvalue() const;

  void apply_gate(const Gate& g);
  void apply_unitary(const Matrix& u, std::span<const int> wires);
  void apply_superop(const Superoperator& s, std::span<const int> wires);
  /// Unconditional projective Z measurement: zeroes coherences across the
  /// measured wires.
  void dephase(std::span<const int> wires);

  std::vector<double> diagonal_probabilities() const;

 private:
  int num_qubits_;
  Matrix rho_;
};

/// Runs a circuit on the full density matrix, conjugating unitary gates and
/// substituting the bound superoperator at every channel slot. Non-terminal
/// measurements dephase; PrepareBasis is rejected (it would need a recorded
/// outcome, which an unconditional density evolution does not have).
DensityMatrix run_density(const Circuit& c,
                          const std::map<int, Superoperator>& bindings);

double density_expectation(const DensityMatrix& rho,
                           const DiagonalObservable& obs);

}  // namespace qcut

#endif  // QCUT_DENSITY_HPP
