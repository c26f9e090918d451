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

#ifndef QCUT_CONFIG_HPP
#define QCUT_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace qcut {

/// Numerical tolerances used across the library. Kept in one record so
/// tests and invariant checks agree on what "equal" means.
struct Tolerances {
  double state_norm = 1e-10;        // | ||psi||^2 - 1 |
  double hermiticity = 1e-10;       // || rho - rho^dag ||_max
  double trace_one = 1e-10;         // | Tr(rho) - 1 |
  double psd_floor = -1e-9;         // smallest admissible eigenvalue
  double unitarity = 1e-10;         // || U^dag U - 1 ||_max
  double identity_residual = 1e-12; // decomposition reconstruction residual
  double trace_drift = 1e-8;        // channel trace preservation per slot
  double exactness = 1e-10;         // agreement between exact evaluation paths
  double zero_branch = 1e-15;       // measurement branch below this is corruption
};

inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

// Hard size caps. Exceeding a cap is an error, never a silent algorithm swap.
inline constexpr int kMaxStatevectorQubits = 16;
inline constexpr int kMaxDensityQubits = 10;
inline constexpr int kMaxCliffordQubits = 12;
inline constexpr int kMaxUnitaryQubits = 10;
inline constexpr int kMaxSuperopQubits = 5;
inline constexpr int kMaxEnumeratedCutGroups = 6;

/// Thrown when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Thrown when a numerical invariant breaks mid-computation (state norm,
/// trace preservation, shot bound). Distinct from bad input.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcut

#endif  // QCUT_CONFIG_HPP
