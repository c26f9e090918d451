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

#ifndef QCUT_CLIFFORD_HPP
#define QCUT_CLIFFORD_HPP

#include <cstdint>
#include <vector>

#include "qcut/linalg.hpp"
#include "qcut/rng.hpp"

namespace qcut {

/// A k-qubit Clifford element modulo global phase, stored as the images of
/// the generators X_0..X_{k-1}, Z_0..Z_{k-1} under conjugation.
///
/// Row i (i < k) encodes U X_i U^dag, row k+i encodes U Z_i U^dag. In each
/// row, bit j is the X-part on qubit j and bit k+j the Z-part; the phase bit
/// gives the sign of the (Hermitian) image Pauli.
struct CliffordTableau {
  int k = 0;
  std::vector<std::uint32_t> rows;  // 2k rows of 2k bits
  std::uint32_t phases = 0;         // bit i = sign of row i

  std::uint64_t key() const;  // stable identity, used for class counting
};

/// Symplectic product of two (x|z) rows: parity of x1&z2 ^ z1&x2.
int symplectic_product(std::uint32_t a, std::uint32_t b, int k);

/// Checks that the rows preserve the Pauli commutation relations,
/// i.e. S Omega S^T = Omega over GF(2).
bool tableau_is_symplectic(const CliffordTableau& t);

/// Draws a tableau exactly uniformly over the k-qubit Clifford group modulo
/// global phase. Builds the generator images row pair by row pair: each X
/// image is a uniform nonzero vector in the symplectic complement of the
/// pairs fixed so far, each Z image a uniform solution of the remaining
/// commutation constraints; phases are uniform bits. 1 <= k <= 12.
CliffordTableau sample_uniform_clifford(int k, Rng& rng);

/// All 24 single-qubit tableaux (6 symplectic matrices x 4 phase patterns).
std::vector<CliffordTableau> enumerate_single_qubit_cliffords();

/// Reconstructs a unitary realizing the tableau's conjugation action, fixed
/// to a deterministic global phase. k <= 10.
Matrix tableau_to_unitary(const CliffordTableau& t);

/// When enabled, tableau_to_unitary re-checks unitarity and the conjugation
/// of every generator on each call.
void set_clifford_debug_checks(bool enabled);

/// Applies the Hermitian Pauli i^{x.z} X^x Z^z (times the sign bit) encoded
/// in `row` to a dense 2^k vector.
void apply_pauli_row(std::uint32_t row, bool negative, int k,
                     std::vector<Complex>& v);

enum class TwoDesignMode { Exhaustive, Sampled };

/// Frobenius deviation of the averaged second moment
///   avg_U sum_j (U|j><j|U^dag)^{(x)2}
/// from its Haar value (1 (x) 1 + SWAP) / (d + 1). Exhaustive mode is only
/// available for k = 1.
double verify_2design(int k, TwoDesignMode mode, std::uint64_t samples = 0,
                      std::uint64_t seed = 0);

/// Same statistic averaged over an explicit unitary ensemble (used for
/// negative controls and oracle comparisons).
double second_moment_deviation(const std::vector<Matrix>& ensemble);

}  // namespace qcut

#endif  // QCUT_CLIFFORD_HPP
