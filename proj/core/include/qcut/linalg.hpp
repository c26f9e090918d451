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

#ifndef QCUT_LINALG_HPP
#define QCUT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace qcut {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Column-stacking vectorization: vec(X)[i + d*j] = X(i, j).
inline Vector vec(const Matrix& x) {
  Vector v(x.size());
  Eigen::Index n = 0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) v(n++) = x(i, j);
  return v;
}

inline Matrix unvec(const Vector& v, Eigen::Index d) {
  Matrix x(d, d);
  Eigen::Index n = 0;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) x(i, j) = v(n++);
  return x;
}

inline double frobenius_distance(const Matrix& a, const Matrix& b) {
  return (a - b).norm();
}

inline bool is_unitary(const Matrix& u, double tolerance) {
  Matrix g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff() <= tolerance;
}

/// Swap operator on C^d (x) C^d: W |a,b> = |b,a>.
inline Matrix swap_operator(int d) {
  Matrix w = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) w(b * d + a, a * d + b) = 1.0;
  return w;
}

}  // namespace qcut

#endif  // QCUT_LINALG_HPP
