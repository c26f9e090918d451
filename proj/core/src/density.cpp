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

#include "qcut/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qcut/config.hpp"

namespace qcut {

namespace {

// Scatter maps for embedding a k-wire block index into the full index space.
struct WireIndexing {
  std::uint64_t wire_mask = 0;
  std::vector<std::uint64_t> offsets;  // block index -> packed full-index bits

  WireIndexing(std::span<const int> wires, int n) {
    const int k = static_cast<int>(wires.size());
    for (int w : wires) {
      if (w < 0 || w >= n) throw ValidationError("wire out of range");
      wire_mask |= std::uint64_t{1} << w;
    }
    offsets.assign(std::uint64_t{1} << k, 0);
    for (std::uint64_t b = 0; b < offsets.size(); ++b) {
      std::uint64_t off = 0;
      for (int j = 0; j < k; ++j)
        if (b & (std::uint64_t{1} << j)) off |= std::uint64_t{1} << wires[j];
      offsets[b] = off;
    }
  }
};

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDensityQubits)
    throw ValidationError("density matrix size " + std::to_string(num_qubits) +
                          " outside [1, " + std::to_string(kMaxDensityQubits) +
                          "]");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  rho_ = Matrix::Zero(dim, dim);
  rho_(0, 0) = 1.0;
}

double DensityMatrix::trace_real() const { return rho_.trace().real(); }

bool DensityMatrix::is_hermitian(double tolerance) const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::apply_unitary(const Matrix& u, std::span<const int> wires) {
  const WireIndexing ix(wires, num_qubits_);
  const std::uint64_t d = ix.offsets.size();
  const std::uint64_t n = std::uint64_t{1} << num_qubits_;
  std::vector<Complex> in(d), out(d);

  // rho <- U rho: act on the row index, one column at a time.
  for (std::uint64_t col = 0; col < n; ++col) {
    for (std::uint64_t base = 0; base < n; ++base) {
      if (base & ix.wire_mask) continue;
      for (std::uint64_t b = 0; b < d; ++b) in[b] = rho_(base | ix.offsets[b], col);
      for (std::uint64_t r = 0; r < d; ++r) {
        Complex acc{0, 0};
        for (std::uint64_t c = 0; c < d; ++c) acc += u(r, c) * in[c];
        out[r] = acc;
      }
      for (std::uint64_t b = 0; b < d; ++b) rho_(base | ix.offsets[b], col) = out[b];
    }
  }
  // rho <- rho U^dag: act on the column index with conj(U).
  for (std::uint64_t row = 0; row < n; ++row) {
    for (std::uint64_t base = 0; base < n; ++base) {
      if (base & ix.wire_mask) continue;
      for (std::uint64_t b = 0; b < d; ++b) in[b] = rho_(row, base | ix.offsets[b]);
      for (std::uint64_t r = 0; r < d; ++r) {
        Complex acc{0, 0};
        for (std::uint64_t c = 0; c < d; ++c) acc += std::conj(u(r, c)) * in[c];
        out[r] = acc;
      }
      for (std::uint64_t b = 0; b < d; ++b) rho_(row, base | ix.offsets[b]) = out[b];
    }
  }
}

void DensityMatrix::apply_gate(const Gate& g) {
  apply_unitary(gate_matrix(g), g.wires);
}

void DensityMatrix::apply_superop(const Superoperator& s,
                                  std::span<const int> wires) {
  const WireIndexing ix(wires, num_qubits_);
  const std::uint64_t d = ix.offsets.size();
  if (s.dim != static_cast<int>(d))
    throw ValidationError("superoperator dimension does not match wire count");
  const std::uint64_t n = std::uint64_t{1} << num_qubits_;
  Vector block(d * d), img(d * d);

  for (std::uint64_t rbase = 0; rbase < n; ++rbase) {
    if (rbase & ix.wire_mask) continue;
    for (std::uint64_t cbase = 0; cbase < n; ++cbase) {
      if (cbase & ix.wire_mask) continue;
      for (std::uint64_t wc = 0; wc < d; ++wc)
        for (std::uint64_t wr = 0; wr < d; ++wr)
          block(wr + d * wc) = rho_(rbase | ix.offsets[wr], cbase | ix.offsets[wc]);
      img = s.matrix * block;
      for (std::uint64_t wc = 0; wc < d; ++wc)
        for (std::uint64_t wr = 0; wr < d; ++wr)
          rho_(rbase | ix.offsets[wr], cbase | ix.offsets[wc]) = img(wr + d * wc);
    }
  }
}

void DensityMatrix::dephase(std::span<const int> wires) {
  std::uint64_t mask = 0;
  for (int w : wires) {
    if (w < 0 || w >= num_qubits_) throw ValidationError("wire out of range");
    mask |= std::uint64_t{1} << w;
  }
  const std::uint64_t n = std::uint64_t{1} << num_qubits_;
  for (std::uint64_t r = 0; r < n; ++r)
    for (std::uint64_t c = 0; c < n; ++c)
      if ((r & mask) != (c & mask)) rho_(r, c) = Complex{0, 0};
}

std::vector<double> DensityMatrix::diagonal_probabilities() const {
  const std::uint64_t n = std::uint64_t{1} << num_qubits_;
  std::vector<double> p(n);
  for (std::uint64_t i = 0; i < n; ++i) p[i] = rho_(i, i).real();
  return p;
}

DensityMatrix run_density(const Circuit& c,
                          const std::map<int, Superoperator>& bindings) {
  validate_circuit(c);
  if (c.num_qubits > kMaxDensityQubits)
    throw ValidationError("circuit exceeds the density-matrix cap");

  DensityMatrix rho(c.num_qubits);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto& op = c.ops[i];
    if (const auto* g = std::get_if<Gate>(&op)) {
      rho.apply_gate(*g);
    } else if (const auto* m = std::get_if<MeasureZ>(&op)) {
      bool terminal = true;
      for (std::size_t j = i + 1; j < c.ops.size(); ++j)
        if (!std::holds_alternative<MeasureZ>(c.ops[j])) terminal = false;
      if (!terminal) rho.dephase(m->wires);
    } else if (std::holds_alternative<PrepareBasis>(op)) {
      throw ValidationError(
          "PrepareBasis has no unconditional density semantics");
    } else if (const auto* s = std::get_if<ChannelSlot>(&op)) {
      auto it = bindings.find(s->slot_id);
      if (it == bindings.end())
        throw ValidationError("unbound channel slot " +
                              std::to_string(s->slot_id));
      rho.apply_superop(it->second, s->wires);
      const double drift = std::abs(rho.trace_real() - 1.0);
      if (drift > tol().trace_drift)
        throw NumericalError("slot " + std::to_string(s->slot_id) +
                             " binding drifted the trace by " +
                             std::to_string(drift));
    }
  }
  return rho;
}

double density_expectation(const DensityMatrix& rho,
                           const DiagonalObservable& obs) {
  const auto p = rho.diagonal_probabilities();
  double acc = 0.0;
  for (std::uint64_t x = 0; x < p.size(); ++x) acc += p[x] * obs.evaluate(x);
  return acc;
}

}  // namespace qcut
