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

#include "qcut/superop.hpp"

#include "qcut/config.hpp"

namespace qcut {

namespace {

bool power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

void check_dim(int d) {
  if (!power_of_two(d) || d > (1 << kMaxSuperopQubits))
    throw ValidationError("superoperator dimension must be 2^k, k <= " +
                          std::to_string(kMaxSuperopQubits));
}

// vec(1) vec(1)^T; sends vec(X) to Tr(X) vec(1).
Matrix trace_projector(int d) {
  Vector id_vec = vec(Matrix::Identity(d, d));
  return id_vec * id_vec.transpose();
}

}  // namespace

Matrix Superoperator::apply(const Matrix& x) const {
  return unvec(matrix * vec(x), dim);
}

Matrix Superoperator::choi() const {
  Matrix j = Matrix::Zero(dim * dim, dim * dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      Matrix e = Matrix::Zero(dim, dim);
      e(a, b) = 1.0;
      const Matrix img = apply(e);
      j.block(a * dim, b * dim, dim, dim) += img;
    }
  }
  return j;
}

bool Superoperator::is_trace_preserving(double tolerance) const {
  const Vector id_vec = vec(Matrix::Identity(dim, dim));
  const Vector lhs = matrix.adjoint() * id_vec;
  return (lhs - id_vec).cwiseAbs().maxCoeff() <= tolerance;
}

Superoperator identity_superop(int d) {
  check_dim(d);
  return Superoperator{Matrix::Identity(d * d, d * d), d};
}

Superoperator sandwich_superop(const Matrix& a, const Matrix& b) {
  const int d = static_cast<int>(a.rows());
  return Superoperator{kron(b.transpose(), a), d};
}

Superoperator psi0_superop(int d) {
  check_dim(d);
  Matrix m = (trace_projector(d) + Matrix::Identity(d * d, d * d)) /
             static_cast<double>(d + 1);
  return Superoperator{std::move(m), d};
}

Superoperator psi1_superop(int d) {
  check_dim(d);
  Matrix m = trace_projector(d) / static_cast<double>(d);
  return Superoperator{std::move(m), d};
}

Superoperator measure_prepare_superop(const Matrix& u) {
  const int d = static_cast<int>(u.rows());
  check_dim(d);
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    const Matrix proj = u.col(j) * u.col(j).adjoint();
    const Vector pv = vec(proj);
    // X -> sum_j Tr(P_j X) P_j; Tr(P X) = vec(P)^dag vec(X) for Hermitian P.
    m += pv * pv.adjoint();
  }
  return Superoperator{std::move(m), d};
}

Superoperator unsigned_cut_mixture_superop(int d) {
  check_dim(d);
  const double w0 = static_cast<double>(d + 1) / (2.0 * d + 1.0);
  const double w1 = static_cast<double>(d) / (2.0 * d + 1.0);
  Matrix m = w0 * psi0_superop(d).matrix + w1 * psi1_superop(d).matrix;
  return Superoperator{std::move(m), d};
}

}  // namespace qcut
