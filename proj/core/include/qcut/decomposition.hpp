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

#ifndef QCUT_DECOMPOSITION_HPP
#define QCUT_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "qcut/rng.hpp"
#include "qcut/superop.hpp"

namespace qcut {

enum class MeasureSpec {
  PauliX,         // rotate to the X eigenbasis, record the sign
  PauliY,
  PauliZ,
  CliffordFresh,  // fresh uniform Clifford basis per use
  TraceOnly,      // measure and discard the outcome
};

enum class PrepareSpec {
  RotatedRecordedOutcome,  // re-prepare the recorded outcome, rotated back
  FixedBasisState,
  UniformRandomBasis,
  PauliEigenstate,        // eigenstate of the measured Pauli
};

/// One signed term of a measure-and-prepare resolution of the identity.
struct MeasurePrepTerm {
  double coefficient = 0.0;
  MeasureSpec measure = MeasureSpec::TraceOnly;
  PrepareSpec prepare = PrepareSpec::FixedBasisState;
  int dim = 2;
  int eigen_label = +1;         // PauliEigenstate: which eigenstate
  std::uint64_t fixed_bits = 0; // FixedBasisState: which basis state
  /// True when the per-shot estimator is weighted by the recorded
  /// measurement sign (the Pauli terms).
  bool outcome_weighted = false;
};

struct QuasiDecomposition {
  std::vector<MeasurePrepTerm> terms;
  double one_norm = 0.0;
  int dim = 2;
};

/// Two-term randomized decomposition on d = 2^k dimensions:
/// +(d+1) x [Clifford measure, rotated re-preparation] and
/// -d x [trace out, uniform basis re-preparation]; one-norm 2d+1.
QuasiDecomposition randomized_decomposition(int k);

/// Single-wire Pauli-basis baseline: eight terms of magnitude 1/2 covering
/// {1, X, Y, Z} x {+1, -1}; one-norm 4. Multi-wire cuts take per-wire
/// tensor products of this table.
QuasiDecomposition pauli_decomposition();

/// Exact superoperator of one term (the outcome-weighted Pauli terms map
/// X -> Tr(P X) |P_e><P_e|). For the Clifford term, `exhaustive_clifford`
/// replaces the closed form by the explicit 24-element group average
/// (d = 2 only).
Superoperator term_superoperator(const MeasurePrepTerm& term,
                                 bool exhaustive_clifford = false);

/// Frobenius residual of sum_i a_i Phi_i minus the identity superoperator.
double verify_identity(const QuasiDecomposition& d,
                       bool exhaustive_clifford_k1 = true);

struct TermDraw {
  int index = 0;
  double scale = 0.0;  // always the decomposition one-norm
  double sign = 1.0;   // sign of the drawn coefficient
};

/// Draws a term with probability |a_i| / one_norm.
TermDraw sample_term(const QuasiDecomposition& d, Rng& rng);

}  // namespace qcut

#endif  // QCUT_DECOMPOSITION_HPP
