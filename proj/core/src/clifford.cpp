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

#include "qcut/clifford.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <utility>

#include "qcut/config.hpp"

namespace qcut {

namespace {

std::atomic<bool> g_debug_checks{false};

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

}  // namespace

void set_clifford_debug_checks(bool enabled) { g_debug_checks = enabled; }

std::uint64_t CliffordTableau::key() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(k));
  for (std::uint32_t r : rows) mix(r);
  mix(phases);
  return h;
}

int symplectic_product(std::uint32_t a, std::uint32_t b, int k) {
  const std::uint32_t mask = (1u << k) - 1;
  const std::uint32_t ax = a & mask, az = (a >> k) & mask;
  const std::uint32_t bx = b & mask, bz = (b >> k) & mask;
  return parity(ax & bz) ^ parity(az & bx);
}

bool tableau_is_symplectic(const CliffordTableau& t) {
  const int k = t.k;
  if (static_cast<int>(t.rows.size()) != 2 * k) return false;
  for (int a = 0; a < 2 * k; ++a) {
    if (t.rows[a] == 0) return false;
    for (int b = a + 1; b < 2 * k; ++b) {
      const int want = (b == a + k) ? 1 : 0;
      if (symplectic_product(t.rows[a], t.rows[b], k) != want) return false;
    }
  }
  return true;
}

namespace {

// Affine GF(2) solver on <= 24-bit vectors. Constraints are
// (mask, rhs) pairs meaning parity(v & mask) == rhs.
struct Gf2System {
  int dim = 0;
  std::vector<std::uint32_t> row_masks;
  std::vector<int> row_rhs;

  void add(std::uint32_t mask, int rhs) {
    row_masks.push_back(mask);
    row_rhs.push_back(rhs);
  }

  // Gaussian elimination; returns false when inconsistent. On success,
  // `particular` solves the system and `null_basis` spans the homogeneous
  // solutions.
  bool solve(std::uint32_t& particular, std::vector<std::uint32_t>& null_basis) const {
    std::vector<std::uint32_t> m = row_masks;
    std::vector<int> r = row_rhs;
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < dim && rank < m.size(); ++col) {
      std::size_t sel = rank;
      while (sel < m.size() && !(m[sel] >> col & 1)) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[rank], m[sel]);
      std::swap(r[rank], r[sel]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != rank && (m[i] >> col & 1)) {
          m[i] ^= m[rank];
          r[i] ^= r[rank];
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    for (std::size_t i = rank; i < m.size(); ++i)
      if (r[i]) return false;

    std::uint32_t pivot_mask = 0;
    for (int c : pivot_col) pivot_mask |= 1u << c;

    particular = 0;
    for (std::size_t i = 0; i < rank; ++i)
      if (r[i]) particular |= 1u << pivot_col[i];

    null_basis.clear();
    for (int col = 0; col < dim; ++col) {
      if (pivot_mask >> col & 1) continue;
      std::uint32_t v = 1u << col;
      for (std::size_t i = 0; i < rank; ++i)
        if (m[i] >> col & 1) v |= 1u << pivot_col[i];
      null_basis.push_back(v);
    }
    return true;
  }
};

// Mask whose inner product with v computes the symplectic product with u.
std::uint32_t omega_mask(std::uint32_t u, int k) {
  const std::uint32_t mask = (1u << k) - 1;
  return ((u & mask) << k) | ((u >> k) & mask);
}

}  // namespace

CliffordTableau sample_uniform_clifford(int k, Rng& rng) {
  if (k < 1 || k > kMaxCliffordQubits)
    throw ValidationError("clifford width " + std::to_string(k) +
                          " outside [1, " + std::to_string(kMaxCliffordQubits) +
                          "]");
  const int dim = 2 * k;
  CliffordTableau t;
  t.k = k;
  t.rows.assign(dim, 0);

  // Images a_i of X_i and b_i of Z_i, built pair by pair. Every choice is
  // uniform over its admissible set, so the resulting symplectic matrix is
  // uniform over the group.
  for (int j = 0; j < k; ++j) {
    Gf2System sys_a;
    sys_a.dim = dim;
    for (int i = 0; i < j; ++i) {
      sys_a.add(omega_mask(t.rows[i], k), 0);
      sys_a.add(omega_mask(t.rows[k + i], k), 0);
    }
    std::uint32_t part = 0;
    std::vector<std::uint32_t> basis;
    if (!sys_a.solve(part, basis) ||
        static_cast<int>(basis.size()) != dim - 2 * j)
      throw NumericalError("symplectic complement has unexpected dimension");
    // Uniform nonzero combination of the homogeneous basis.
    const std::uint64_t coeff =
        1 + uniform_below(rng, (std::uint64_t{1} << basis.size()) - 1);
    std::uint32_t a = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeff >> b & 1) a ^= basis[b];
    t.rows[j] = a;

    Gf2System sys_b;
    sys_b.dim = dim;
    for (int i = 0; i < j; ++i) {
      sys_b.add(omega_mask(t.rows[i], k), 0);
      sys_b.add(omega_mask(t.rows[k + i], k), 0);
    }
    sys_b.add(omega_mask(a, k), 1);
    if (!sys_b.solve(part, basis) ||
        static_cast<int>(basis.size()) != dim - 2 * j - 1)
      throw NumericalError("conjugate-pair solution space has unexpected dimension");
    const std::uint64_t c2 = uniform_bits(rng, static_cast<int>(basis.size()));
    std::uint32_t b = part;
    for (std::size_t bi = 0; bi < basis.size(); ++bi)
      if (c2 >> bi & 1) b ^= basis[bi];
    t.rows[k + j] = b;
  }

  t.phases = static_cast<std::uint32_t>(uniform_bits(rng, dim));
  return t;
}

std::vector<CliffordTableau> enumerate_single_qubit_cliffords() {
  std::vector<CliffordTableau> out;
  for (std::uint32_t a = 1; a <= 3; ++a) {
    for (std::uint32_t b = 1; b <= 3; ++b) {
      if (symplectic_product(a, b, 1) != 1) continue;
      for (std::uint32_t ph = 0; ph < 4; ++ph) {
        CliffordTableau t;
        t.k = 1;
        t.rows = {a, b};
        t.phases = ph;
        out.push_back(std::move(t));
      }
    }
  }
  return out;  // 6 symplectic matrices x 4 phase patterns = 24
}

void apply_pauli_row(std::uint32_t row, bool negative, int k,
                     std::vector<Complex>& v) {
  const std::uint32_t mask = (1u << k) - 1;
  const std::uint32_t x = row & mask;
  const std::uint32_t z = (row >> k) & mask;
  // Hermitian convention: P = i^{|x&z|} X^x Z^z.
  static const Complex kIpow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex lead = kIpow[std::popcount(x & z) & 3];
  if (negative) lead = -lead;
  const std::uint64_t n = v.size();
  if (x == 0) {
    for (std::uint64_t b = 0; b < n; ++b) {
      const Complex ph = parity(static_cast<std::uint32_t>(b) & z) ? -lead : lead;
      v[b] *= ph;
    }
    return;
  }
  std::vector<Complex> out(n);
  for (std::uint64_t b = 0; b < n; ++b) {
    const Complex ph = parity(static_cast<std::uint32_t>(b) & z) ? -lead : lead;
    out[b ^ x] = ph * v[b];
  }
  v.swap(out);
}

Matrix tableau_to_unitary(const CliffordTableau& t) {
  const int k = t.k;
  if (k < 1 || k > kMaxUnitaryQubits)
    throw ValidationError("tableau width outside the dense-unitary cap");
  if (!tableau_is_symplectic(t))
    throw ValidationError("tableau is not symplectic");
  const std::uint64_t d = std::uint64_t{1} << k;

  // |phi_0> = U|0...0> is the unique state stabilized by the signed images
  // of Z_0..Z_{k-1}. Project basis vectors until one survives.
  std::vector<Complex> phi0;
  for (std::uint64_t s = 0; s < d; ++s) {
    std::vector<Complex> v(d, Complex{0, 0});
    v[s] = 1.0;
    for (int i = 0; i < k; ++i) {
      std::vector<Complex> pv = v;
      apply_pauli_row(t.rows[k + i], (t.phases >> (k + i)) & 1, k, pv);
      for (std::uint64_t b = 0; b < d; ++b) v[b] = 0.5 * (v[b] + pv[b]);
    }
    double norm2 = 0.0;
    for (const Complex& c : v) norm2 += std::norm(c);
    if (norm2 > 0.5 / static_cast<double>(d)) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (Complex& c : v) c *= inv;
      phi0 = std::move(v);
      break;
    }
  }
  if (phi0.empty()) throw NumericalError("stabilizer projector annihilated every basis state");

  // Deterministic global phase: largest-magnitude component real positive.
  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < d; ++b)
    if (std::abs(phi0[b]) > std::abs(phi0[best])) best = b;
  const Complex rot = std::conj(phi0[best]) / std::abs(phi0[best]);
  for (Complex& c : phi0) c *= rot;

  // Column x is the image product over set bits of x applied to |phi_0>;
  // the X images commute, so filling in lowest-set-bit order is well defined.
  Matrix u(d, d);
  std::vector<std::vector<Complex>> cols(d);
  cols[0] = std::move(phi0);
  for (std::uint64_t x = 1; x < d; ++x) {
    const int low = std::countr_zero(x);
    cols[x] = cols[x & (x - 1)];
    apply_pauli_row(t.rows[low], (t.phases >> low) & 1, k, cols[x]);
  }
  for (std::uint64_t x = 0; x < d; ++x)
    for (std::uint64_t r = 0; r < d; ++r) u(r, x) = cols[x][r];

  if (g_debug_checks) {
    if (!is_unitary(u, tol().unitarity))
      throw NumericalError("reconstructed tableau unitary is not unitary");
    auto pauli_matrix = [&](std::uint32_t row, bool neg) {
      Matrix p(d, d);
      for (std::uint64_t s = 0; s < d; ++s) {
        std::vector<Complex> e(d, Complex{0, 0});
        e[s] = 1.0;
        apply_pauli_row(row, neg, k, e);
        for (std::uint64_t b = 0; b < d; ++b) p(b, s) = e[b];
      }
      return p;
    };
    for (int i = 0; i < 2 * k; ++i) {
      const std::uint32_t gen = 1u << i;  // X_i for i < k, Z_{i-k} otherwise
      const Matrix lhs = u * pauli_matrix(gen, false) * u.adjoint();
      const Matrix rhs = pauli_matrix(t.rows[i], (t.phases >> i) & 1);
      if (frobenius_distance(lhs, rhs) > 1e-9)
        throw NumericalError("tableau conjugation check failed");
    }
  }
  return u;
}

namespace {

Matrix second_moment_of(const Matrix& u) {
  const Eigen::Index d = u.rows();
  Matrix acc = Matrix::Zero(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Matrix proj = u.col(j) * u.col(j).adjoint();
    acc += kron(proj, proj);
  }
  return acc;
}

Matrix haar_second_moment_target(int d) {
  return (Matrix::Identity(d * d, d * d) + swap_operator(d)) /
         static_cast<double>(d + 1);
}

}  // namespace

double second_moment_deviation(const std::vector<Matrix>& ensemble) {
  if (ensemble.empty()) throw ValidationError("empty unitary ensemble");
  const Eigen::Index d = ensemble.front().rows();
  Matrix acc = Matrix::Zero(d * d, d * d);
  for (const Matrix& u : ensemble) acc += second_moment_of(u);
  acc /= static_cast<double>(ensemble.size());
  return frobenius_distance(acc, haar_second_moment_target(static_cast<int>(d)));
}

double verify_2design(int k, TwoDesignMode mode, std::uint64_t samples,
                      std::uint64_t seed) {
  if (mode == TwoDesignMode::Exhaustive) {
    if (k != 1)
      throw ValidationError("exhaustive 2-design check only for k = 1");
    std::vector<Matrix> ensemble;
    for (const auto& t : enumerate_single_qubit_cliffords())
      ensemble.push_back(tableau_to_unitary(t));
    return second_moment_deviation(ensemble);
  }
  if (samples == 0) throw ValidationError("sampled 2-design check needs samples");
  const int d = 1 << k;
  Rng rng = make_rng(seed);
  Matrix acc = Matrix::Zero(d * d, d * d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Matrix u = tableau_to_unitary(sample_uniform_clifford(k, rng));
    acc += second_moment_of(u);
  }
  acc /= static_cast<double>(samples);
  return frobenius_distance(acc, haar_second_moment_target(d));
}

}  // namespace qcut
