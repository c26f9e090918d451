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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "qcut/config.hpp"
#include "qcut/density.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/shot_runner.hpp"
#include "qcut/statevector.hpp"

using namespace qcut;

namespace {

Graph five_vertex_instance() {
  ClusteredGraphSpec spec;
  spec.clusters = 2;
  spec.cluster_size = 2;
  spec.separator_size = 1;
  spec.seed = 11;
  return generate_clustered_graph(spec);
}

}  // namespace

TEST_CASE("hadamard creates the equal superposition") {
  Statevector sv(1);
  sv.apply_gate(Gate{GateKind::H, 0.0, {0}});
  const double r2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(sv.amplitude(0) - Complex{r2, 0}) < 1e-12);
  CHECK(std::abs(sv.amplitude(1) - Complex{r2, 0}) < 1e-12);
}

TEST_CASE("x flips a basis state") {
  Statevector sv(1);
  sv.apply_gate(Gate{GateKind::X, 0.0, {0}});
  CHECK(std::abs(sv.amplitude(1) - Complex{1, 0}) < 1e-12);
}

TEST_CASE("rzz is phase-only") {
  Statevector sv(2);
  sv.apply_gate(Gate{GateKind::H, 0.0, {0}});
  sv.apply_gate(Gate{GateKind::H, 0.0, {1}});
  const auto before = sv.probabilities();
  sv.apply_gate(Gate{GateKind::RZZ, 0.7, {0, 1}});
  const auto after = sv.probabilities();
  for (std::size_t i = 0; i < before.size(); ++i)
    CHECK(std::abs(before[i] - after[i]) < 1e-12);
  // Convention check on |00>: amplitude picks up exp(-i theta/2).
  Statevector basis(2);
  basis.apply_gate(Gate{GateKind::RZZ, 0.7, {0, 1}});
  CHECK(std::abs(basis.amplitude(0) - std::exp(Complex{0, -0.35})) < 1e-12);
}

TEST_CASE("gate wires out of range are rejected") {
  Statevector sv(2);
  CHECK_THROWS_AS(sv.apply_gate(Gate{GateKind::H, 0.0, {2}}), ValidationError);
}

TEST_CASE("norm is preserved by long unitary sequences") {
  Statevector sv(4);
  Rng rng = make_rng(3);
  for (int step = 0; step < 200; ++step) {
    const int q = static_cast<int>(uniform_below(rng, 4));
    const int q2 = (q + 1 + static_cast<int>(uniform_below(rng, 3))) % 4;
    switch (uniform_below(rng, 5)) {
      case 0: sv.apply_gate(Gate{GateKind::H, 0.0, {q}}); break;
      case 1: sv.apply_gate(Gate{GateKind::RX, uniform_unit(rng), {q}}); break;
      case 2: sv.apply_gate(Gate{GateKind::RZZ, uniform_unit(rng), {q, q2}}); break;
      case 3: sv.apply_gate(Gate{GateKind::CNOT, 0.0, {q, q2}}); break;
      default: sv.apply_gate(Gate{GateKind::S, 0.0, {q}}); break;
    }
  }
  CHECK(std::abs(sv.norm_squared() - 1.0) <= 1e-10);
}

TEST_CASE("bell circuit shot outcomes are correlated and fair") {
  Circuit c;
  c.num_qubits = 2;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {0, 1});
  c.push_measure({0, 1});

  Rng rng = make_rng(42);
  int ones = 0;
  const int reps = 20000;
  for (int i = 0; i < reps; ++i) {
    const ShotResult r = run_shot(c, rng, {});
    CHECK((r.final_bits == 0 || r.final_bits == 3));
    if (r.final_bits == 3) ++ones;
  }
  const double freq = static_cast<double>(ones) / reps;
  CHECK(std::abs(freq - 0.5) < 5.0 * std::sqrt(0.25 / reps));
}

TEST_CASE("a circuit without measurement is rejected") {
  Circuit c;
  c.num_qubits = 1;
  c.push_gate(GateKind::H, {0});
  Rng rng = make_rng(0);
  CHECK_THROWS_WITH_AS(static_cast<void>(run_shot(c, rng, {})),
                       "no terminal measurement in circuit", ValidationError);
}

TEST_CASE("measure then re-prepare the same outcome is the identity") {
  Circuit c;
  c.num_qubits = 2;
  c.push_gate(GateKind::X, {1});
  c.push_measure({0, 1}, "mid");
  c.push_prepare({0, 1}, "mid");
  c.push_measure({0, 1});
  Rng rng = make_rng(7);
  for (int i = 0; i < 20; ++i) {
    const ShotResult r = run_shot(c, rng, {});
    CHECK(r.final_bits == 2);
  }
}

TEST_CASE("born rule frequencies match the exact distribution") {
  // 3-qubit circuit with a spread of outcome probabilities.
  Circuit c;
  c.num_qubits = 3;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::RX, {1}, 0.9);
  c.push_gate(GateKind::CNOT, {0, 2});
  c.push_gate(GateKind::RZZ, {1, 2}, 1.3);
  c.push_gate(GateKind::H, {2});
  c.push_measure({0, 1, 2});

  Circuit pure = c;
  pure.ops.pop_back();
  pure.push_measure({0, 1, 2});
  const auto exact = exact_distribution(c);

  std::vector<int> counts(8, 0);
  Rng rng = make_rng(1234);
  const int reps = 100000;
  for (int i = 0; i < reps; ++i) ++counts[run_shot(c, rng, {}).final_bits];

  for (int x = 0; x < 8; ++x) {
    const double expect = exact[x];
    const double sigma = std::sqrt(expect * (1.0 - expect) / reps);
    CHECK(std::abs(counts[x] / static_cast<double>(reps) - expect) <=
          5.0 * sigma + 1e-9);
  }
}

TEST_CASE("exact expectation of the flat qaoa state is zero") {
  const Graph g = five_vertex_instance();
  QAOAParams params;
  params.gammas = {0.0};
  params.betas = {0.0};
  const Circuit c = build_qaoa_circuit(g, params);
  CHECK(std::abs(exact_expectation(c, maxcut_cost_operator(g))) < 1e-12);
}

TEST_CASE("identity circuit leaves the zz eigenstate alone") {
  Circuit c;
  c.num_qubits = 2;
  c.push_measure({0, 1});
  DiagonalObservable zz{
      [](std::uint64_t x) {
        return ((x & 1) == ((x >> 1) & 1)) ? 1.0 : -1.0;
      },
      "none"};
  CHECK(exact_expectation(c, zz) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact expectation matches the full-enumeration oracle") {
  const Graph g = five_vertex_instance();
  REQUIRE(g.num_vertices == 5);
  QAOAParams params;
  params.gammas = {0.4};
  params.betas = {0.7};
  const Circuit c = build_qaoa_circuit(g, params);
  const DiagonalObservable obs = maxcut_cost_operator(g);
  const double expected = oracle::brute_force_expectation(c, obs);
  CHECK(exact_expectation(c, obs) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("exact expectation enforces its caps and preconditions") {
  Circuit c;
  c.num_qubits = 2;
  c.push_slot(0, {0});
  c.push_measure({0, 1});
  CHECK_THROWS_AS(exact_expectation(c, parity_observable()), ValidationError);
}

TEST_CASE("density of the identity circuit is the initial state") {
  Circuit c;
  c.num_qubits = 2;
  c.push_measure({0, 1});
  const DensityMatrix rho = run_density(c, {});
  CHECK(std::abs(rho.matrix()(0, 0) - Complex{1, 0}) < 1e-14);
  CHECK(rho.matrix().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("depolarizing slot after h yields the maximally mixed qubit") {
  Circuit c;
  c.num_qubits = 1;
  c.push_gate(GateKind::H, {0});
  c.push_slot(0, {0});
  c.push_measure({0});
  std::map<int, Superoperator> bindings;
  bindings.emplace(0, psi1_superop(2));
  const DensityMatrix rho = run_density(c, bindings);
  CHECK(std::abs(rho.matrix()(0, 0) - Complex{0.5, 0}) < 1e-12);
  CHECK(std::abs(rho.matrix()(1, 1) - Complex{0.5, 0}) < 1e-12);
  CHECK(std::abs(rho.matrix()(0, 1)) < 1e-12);
}

TEST_CASE("closed-form channel slot equals the clifford-enumeration oracle") {
  // Average the measure-and-prepare circuit over all 24 single-qubit
  // Cliffords (from the independent {H,S} closure) and compare against one
  // run with the closed-form superoperator bound to the slot.
  Circuit c;
  c.num_qubits = 2;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {0, 1});
  c.push_slot(0, {1});
  c.push_gate(GateKind::RX, {1}, 0.6);
  c.push_measure({0, 1});

  std::map<int, Superoperator> closed;
  closed.emplace(0, psi0_superop(2));
  const Matrix direct = run_density(c, closed).matrix();

  const auto group = oracle::single_qubit_clifford_group();
  REQUIRE(group.size() == 24);
  Matrix averaged = Matrix::Zero(4, 4);
  for (const Matrix& u : group) {
    std::map<int, Superoperator> b;
    b.emplace(0, measure_prepare_superop(u));
    averaged += run_density(c, b).matrix();
  }
  averaged /= static_cast<double>(group.size());
  CHECK((direct - averaged).norm() < 1e-12);
}

TEST_CASE("density diagonal equals statevector probabilities") {
  const Graph g = five_vertex_instance();
  QAOAParams params;
  params.gammas = {0.3};
  params.betas = {0.9};
  const Circuit c = build_qaoa_circuit(g, params);
  const auto probs = exact_distribution(c);
  const auto diag = run_density(c, {}).diagonal_probabilities();
  REQUIRE(probs.size() == diag.size());
  for (std::size_t i = 0; i < probs.size(); ++i)
    CHECK(std::abs(probs[i] - diag[i]) <= 1e-10);
}

TEST_CASE("density cap is enforced loudly") {
  CHECK_THROWS_AS(DensityMatrix(kMaxDensityQubits + 1), ValidationError);
  CHECK_THROWS_AS(Statevector(kMaxStatevectorQubits + 1), ValidationError);
}

TEST_CASE("non-trace-preserving bindings are detected") {
  Circuit c;
  c.num_qubits = 1;
  c.push_slot(0, {0});
  c.push_measure({0});
  Superoperator bad = psi1_superop(2);
  bad.matrix *= 0.5;
  std::map<int, Superoperator> bindings;
  bindings.emplace(0, bad);
  CHECK_THROWS_AS(run_density(c, bindings), NumericalError);
}

TEST_CASE("density matrix invariants hold after channel insertion") {
  Circuit c;
  c.num_qubits = 2;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {0, 1});
  c.push_slot(0, {0});
  c.push_measure({0, 1});
  std::map<int, Superoperator> bindings;
  bindings.emplace(0, psi0_superop(2));
  const DensityMatrix rho = run_density(c, bindings);
  CHECK(rho.is_hermitian(1e-10));
  CHECK(std::abs(rho.trace_real() - 1.0) <= 1e-10);
  CHECK(rho.min_eigenvalue() >= -1e-9);
}

TEST_CASE("circuit json round-trips exactly") {
  const Graph g = five_vertex_instance();
  QAOAParams params;
  params.gammas = {0.25, 0.5};
  params.betas = {0.75, 0.125};
  Circuit c = build_qaoa_circuit(g, params);
  c.push_slot(3, {1, 2});
  std::swap(c.ops[c.ops.size() - 1], c.ops[c.ops.size() - 2]);

  const std::string text = circuit_to_json(c);
  const Circuit back = circuit_from_json(text);
  REQUIRE(back.ops.size() == c.ops.size());
  CHECK(circuit_to_json(back) == text);
}

TEST_CASE("unbound slots are reported") {
  Circuit c;
  c.num_qubits = 1;
  c.push_slot(5, {0});
  c.push_measure({0});
  Rng rng = make_rng(0);
  CHECK_THROWS_AS(static_cast<void>(run_shot(c, rng, {})), ValidationError);
}
