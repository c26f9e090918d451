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

// Test-only reference implementations, deliberately independent of the
// library's execution paths: full-matrix circuit evaluation via Kronecker
// products, and the single-qubit Clifford group generated from {H, S}.

#ifndef QCUT_TESTS_ORACLES_HPP
#define QCUT_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/linalg.hpp"
#include "qcut/observable.hpp"

namespace qcut::oracle {

// Upper-tail chi-square critical values at p = 0.001.
inline constexpr double kChi2Crit23 = 49.7282324664315;
inline constexpr double kChi2Crit119 = 172.41768160217916;

/// Embeds a gate matrix into the full 2^n space by Kronecker products with
/// identities plus explicit index permutation for arbitrary wire order.
inline Matrix embed_gate(const Matrix& u, const std::vector<int>& wires, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const int k = static_cast<int>(wires.size());
  Matrix full = Matrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t sub_col = 0;
    for (int j = 0; j < k; ++j)
      if (col >> wires[j] & 1) sub_col |= std::uint64_t{1} << j;
    for (std::uint64_t sub_row = 0; sub_row < (std::uint64_t{1} << k); ++sub_row) {
      const Complex amp = u(sub_row, sub_col);
      if (amp == Complex{0, 0}) continue;
      std::uint64_t row = col;
      for (int j = 0; j < k; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << wires[j];
        if (sub_row >> j & 1)
          row |= bit;
        else
          row &= ~bit;
      }
      full(row, col) += amp;
    }
  }
  return full;
}

/// Builds the full-circuit unitary as a product of embedded gate matrices.
/// O(4^n) memory; for oracle use on tiny circuits only.
inline Matrix full_circuit_unitary(const Circuit& c) {
  const std::uint64_t dim = std::uint64_t{1} << c.num_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate>(&op))
      u = embed_gate(gate_matrix(*g), g->wires, c.num_qubits) * u;
  }
  return u;
}

/// Brute-force expectation: build the full unitary, apply it to |0...0>,
/// and sum f(x) |amp_x|^2 over every basis state.
inline double brute_force_expectation(const Circuit& c,
                                      const DiagonalObservable& obs) {
  const Matrix u = full_circuit_unitary(c);
  double acc = 0.0;
  for (Eigen::Index x = 0; x < u.rows(); ++x)
    acc += std::norm(u(x, 0)) * obs.evaluate(static_cast<std::uint64_t>(x));
  return acc;
}

inline std::vector<double> brute_force_distribution(const Circuit& c) {
  const Matrix u = full_circuit_unitary(c);
  std::vector<double> p(u.rows());
  for (Eigen::Index x = 0; x < u.rows(); ++x) p[x] = std::norm(u(x, 0));
  return p;
}

/// The 24 single-qubit Cliffords as matrices, generated by closing {H, S}
/// under multiplication modulo global phase.
inline std::vector<Matrix> single_qubit_clifford_group() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Matrix h{{r2, r2}, {r2, -r2}};
  Matrix s{{1, 0}, {0, i}};

  auto canonical = [](Matrix m) {
    // Fix global phase: first entry of largest magnitude made real positive.
    Eigen::Index br = 0, bc = 0;
    double best = -1.0;
    for (Eigen::Index a = 0; a < 2; ++a)
      for (Eigen::Index b = 0; b < 2; ++b)
        if (std::abs(m(a, b)) > best + 1e-12) {
          best = std::abs(m(a, b));
          br = a;
          bc = b;
        }
    m *= std::conj(m(br, bc)) / std::abs(m(br, bc));
    return m;
  };
  auto same = [](const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff() < 1e-9;
  };

  std::vector<Matrix> group = {canonical(Matrix::Identity(2, 2))};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Matrix> next = group;
    for (const Matrix& g : group) {
      for (const Matrix* gen : {&h, &s}) {
        const Matrix cand = canonical(*gen * g);
        bool known = false;
        for (const Matrix& m : next)
          if (same(cand, m)) {
            known = true;
            break;
          }
        if (!known) {
          next.push_back(cand);
          grew = true;
        }
      }
    }
    group = std::move(next);
  }
  return group;
}

}  // namespace qcut::oracle

#endif  // QCUT_TESTS_ORACLES_HPP
