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

#include "qcut/decomposition.hpp"

#include <cmath>

#include "qcut/clifford.hpp"
#include "qcut/config.hpp"

namespace qcut {

namespace {

Matrix pauli_matrix(MeasureSpec p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case MeasureSpec::PauliX: return Matrix{{0, 1}, {1, 0}};
    case MeasureSpec::PauliY: return Matrix{{0, -i}, {i, 0}};
    case MeasureSpec::PauliZ: return Matrix{{1, 0}, {0, -1}};
    default: throw ValidationError("not a Pauli measurement");
  }
}

// Eigenstate projector |P_e><P_e| of a single-qubit Pauli.
Matrix pauli_eigenprojector(MeasureSpec p, int eigen_label) {
  const Matrix pm = pauli_matrix(p);
  return 0.5 * (Matrix::Identity(2, 2) +
                static_cast<double>(eigen_label) * pm);
}

double magnitude_sum(const std::vector<MeasurePrepTerm>& terms) {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coefficient);
  return s;
}

}  // namespace

QuasiDecomposition randomized_decomposition(int k) {
  if (k < 1 || k > kMaxCliffordQubits)
    throw ValidationError("randomized decomposition width out of range");
  const int d = 1 << k;
  QuasiDecomposition q;
  q.dim = d;
  MeasurePrepTerm keep;
  keep.coefficient = static_cast<double>(d + 1);
  keep.measure = MeasureSpec::CliffordFresh;
  keep.prepare = PrepareSpec::RotatedRecordedOutcome;
  keep.dim = d;
  MeasurePrepTerm scramble;
  scramble.coefficient = -static_cast<double>(d);
  scramble.measure = MeasureSpec::TraceOnly;
  scramble.prepare = PrepareSpec::UniformRandomBasis;
  scramble.dim = d;
  q.terms = {keep, scramble};
  q.one_norm = magnitude_sum(q.terms);  // 2d + 1
  return q;
}

QuasiDecomposition pauli_decomposition() {
  QuasiDecomposition q;
  q.dim = 2;
  // rho = 1/2 [ Tr(rho)(|0><0| + |1><1|)
  //           + sum_P Tr(P rho)(|P+><P+| - |P-><P-|) ].
  for (int e : {+1, -1}) {
    MeasurePrepTerm t;
    t.coefficient = 0.5;
    t.measure = MeasureSpec::TraceOnly;
    t.prepare = PrepareSpec::FixedBasisState;
    t.fixed_bits = (e == +1) ? 0 : 1;
    q.terms.push_back(t);
  }
  for (MeasureSpec p :
       {MeasureSpec::PauliX, MeasureSpec::PauliY, MeasureSpec::PauliZ}) {
    for (int e : {+1, -1}) {
      MeasurePrepTerm t;
      t.coefficient = 0.5 * e;
      t.measure = p;
      t.prepare = PrepareSpec::PauliEigenstate;
      t.eigen_label = e;
      t.outcome_weighted = true;
      q.terms.push_back(t);
    }
  }
  q.one_norm = magnitude_sum(q.terms);  // 4
  return q;
}

Superoperator term_superoperator(const MeasurePrepTerm& term,
                                 bool exhaustive_clifford) {
  const int d = term.dim;
  switch (term.measure) {
    case MeasureSpec::CliffordFresh: {
      if (exhaustive_clifford) {
        if (d != 2)
          throw ValidationError("exhaustive Clifford average only for d = 2");
        Matrix acc = Matrix::Zero(d * d, d * d);
        const auto group = enumerate_single_qubit_cliffords();
        for (const auto& t : group)
          acc += measure_prepare_superop(tableau_to_unitary(t)).matrix;
        acc /= static_cast<double>(group.size());
        return Superoperator{std::move(acc), d};
      }
      return psi0_superop(d);
    }
    case MeasureSpec::TraceOnly: {
      if (term.prepare == PrepareSpec::UniformRandomBasis) return psi1_superop(d);
      // Trace out and prepare a fixed basis state.
      Matrix target = Matrix::Zero(d, d);
      target(term.fixed_bits, term.fixed_bits) = 1.0;
      const Vector tv = vec(target);
      const Vector iv = vec(Matrix::Identity(d, d));
      return Superoperator{tv * iv.transpose(), d};
    }
    default: {
      // Outcome-weighted Pauli term: X -> Tr(P X) |P_e><P_e|.
      if (d != 2) throw ValidationError("Pauli terms act on single wires");
      const Matrix proj = pauli_eigenprojector(term.measure, term.eigen_label);
      const Matrix p = pauli_matrix(term.measure);
      const Vector pv = vec(proj);
      // Tr(P X) = vec(P)^dag vec(X) for Hermitian P.
      return Superoperator{pv * vec(p).adjoint(), 2};
    }
  }
}

double verify_identity(const QuasiDecomposition& q,
                       bool exhaustive_clifford_k1) {
  if (q.dim > 32) throw ValidationError("identity check limited to dim 32");
  const double norm_gap = std::abs(q.one_norm - [&] {
    double s = 0.0;
    for (const auto& t : q.terms) s += std::abs(t.coefficient);
    return s;
  }());
  if (norm_gap > 1e-12)
    throw ValidationError("decomposition one-norm is inconsistent");

  Matrix acc = Matrix::Zero(q.dim * q.dim, q.dim * q.dim);
  for (const auto& t : q.terms) {
    const bool exhaustive = exhaustive_clifford_k1 && t.dim == 2 &&
                            t.measure == MeasureSpec::CliffordFresh;
    acc += t.coefficient * term_superoperator(t, exhaustive).matrix;
  }
  return frobenius_distance(acc, Matrix::Identity(q.dim * q.dim, q.dim * q.dim));
}

TermDraw sample_term(const QuasiDecomposition& q, Rng& rng) {
  const double u = uniform_unit(rng) * q.one_norm;
  double acc = 0.0;
  for (std::size_t i = 0; i < q.terms.size(); ++i) {
    acc += std::abs(q.terms[i].coefficient);
    if (u < acc)
      return TermDraw{static_cast<int>(i), q.one_norm,
                      q.terms[i].coefficient < 0 ? -1.0 : 1.0};
  }
  const std::size_t last = q.terms.size() - 1;
  return TermDraw{static_cast<int>(last), q.one_norm,
                  q.terms[last].coefficient < 0 ? -1.0 : 1.0};
}

}  // namespace qcut
