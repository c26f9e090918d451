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

#ifndef QCUT_SUPEROP_HPP
#define QCUT_SUPEROP_HPP

#include "qcut/linalg.hpp"

namespace qcut {

/// Linear map on d x d operators, stored as a d^2 x d^2 matrix in the
/// column-stacking convention: vec(Phi(X)) = matrix * vec(X).
struct Superoperator {
  Matrix matrix;
  int dim = 0;

  Matrix apply(const Matrix& x) const;
  /// Choi operator J(Phi) = sum_{ij} |i><j| (x) Phi(|i><j|).
  Matrix choi() const;
  /// True when <<1| is a left fixed point, i.e. the map preserves trace.
  bool is_trace_preserving(double tolerance) const;
};

Superoperator identity_superop(int d);

/// Superoperator of X -> A X B in the column-stacking convention
/// (kron(B^T, A)).
Superoperator sandwich_superop(const Matrix& a, const Matrix& b);

/// Randomized measure-and-prepare channel, closed form
///   X -> (Tr(X) 1 + X) / (d + 1),  d = 2^k, k <= 5.
Superoperator psi0_superop(int d);

/// Completely depolarizing channel X -> Tr(X) 1 / d.
Superoperator psi1_superop(int d);

/// Measure-and-prepare map of a fixed basis unitary U:
///   X -> sum_j <j|U^dag X U|j> U|j><j|U^dag.
/// Averaging this over a 2-design reproduces psi0_superop.
Superoperator measure_prepare_superop(const Matrix& u);

/// Convex mixture (d+1)/(2d+1) psi0 + d/(2d+1) psi1: the channel actually
/// applied on a cut when the branch sign is discarded.
Superoperator unsigned_cut_mixture_superop(int d);

}  // namespace qcut

#endif  // QCUT_SUPEROP_HPP
