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

#include "oracles.hpp"
#include "qcut/config.hpp"
#include "qcut/cutting.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/statevector.hpp"

using namespace qcut;

namespace {

Circuit bell_circuit() {
  Circuit c;
  c.num_qubits = 2;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {0, 1});
  c.push_measure({0, 1});
  return c;
}

// Three-qubit chain with two sequential single-wire cut points.
Circuit chain3_circuit() {
  Circuit c;
  c.num_qubits = 3;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::RZZ, {0, 1}, 0.8);
  c.push_gate(GateKind::RX, {1}, 0.3);
  c.push_gate(GateKind::RZZ, {1, 2}, 1.1);
  c.push_gate(GateKind::RX, {2}, 0.9);
  c.push_measure({0, 1, 2});
  return c;
}

}  // namespace

TEST_CASE("bipartition of the bell circuit") {
  const Circuit c = bell_circuit();
  const CutPlan plan = plan_bipartition(c, {0}, {0, 1});
  REQUIRE(plan.groups.size() == 1);
  CHECK(plan.groups[0].position == 1);
  CHECK(plan.groups[0].wires == std::vector<int>{0});
  REQUIRE(plan.fragments.size() == 2);
  CHECK(plan.fragments[0].support == std::vector<int>{0});
  CHECK(plan.fragments[1].support == std::vector<int>{0, 1});
  CHECK(plan.single_device_recyclable);
}

TEST_CASE("disjoint parts are rejected with a clear message") {
  const Circuit c = bell_circuit();
  CHECK_THROWS_WITH_AS(plan_bipartition(c, {0}, {1}),
                       "nothing to cut: A and B are disjoint", ValidationError);
}

TEST_CASE("non-composed circuits name the violating op") {
  Circuit c;
  c.num_qubits = 3;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {1, 2});
  c.push_gate(GateKind::CNOT, {0, 1});  // back outside B after B started
  c.push_measure({0, 1, 2});
  CHECK_THROWS_WITH_AS(
      plan_bipartition(c, {0, 1}, {1, 2}),
      "circuit is not a composition over the given parts: op 2 acts outside "
      "B after the A prefix",
      ValidationError);
}

TEST_CASE("wider overlaps produce wider groups") {
  Circuit c;
  c.num_qubits = 4;
  c.push_gate(GateKind::H, {0});
  c.push_gate(GateKind::CNOT, {0, 1});
  c.push_gate(GateKind::CNOT, {1, 2});
  c.push_gate(GateKind::RZZ, {2, 3}, 0.4);
  c.push_gate(GateKind::RX, {3}, 0.2);
  c.push_measure({0, 1, 2, 3});
  const CutPlan plan = plan_bipartition(c, {0, 1, 2}, {1, 2, 3});
  REQUIRE(plan.groups.size() == 1);
  CHECK(plan.groups[0].wires == std::vector<int>{1, 2});
  CHECK(plan.groups[0].scale() == 9.0);  // 2d+1 with d = 4
}

TEST_CASE("bell estimate is unbiased with the certified bound") {
  const Circuit c = bell_circuit();
  const DiagonalObservable parity = parity_observable();
  const double exact = exact_expectation(c, parity);
  CHECK(exact == doctest::Approx(1.0).epsilon(1e-12));

  for (CutMethod method : {CutMethod::Randomized, CutMethod::Pauli}) {
    const CutPlan plan = plan_bipartition(c, {0}, {0, 1}, method);
    ShotOptions opt;
    opt.shots = 100000;
    opt.seed = 21;
    const Estimate e = estimate(c, plan, parity, opt);
    CHECK(e.per_shot_bound ==
          (method == CutMethod::Randomized ? 5.0 : 4.0));
    CHECK(std::abs(e.mean - exact) <= 3.0 * e.std_error + 1e-12);
    CHECK(e.shots == opt.shots);
  }
}

TEST_CASE("exact cut expectation is unbiased on a no-cut plan") {
  const Circuit c = chain3_circuit();
  CutPlan empty;
  empty.fragments.push_back(Fragment{});
  for (std::size_t i = 0; i < c.ops.size(); ++i)
    if (std::holds_alternative<Gate>(c.ops[i]))
      empty.fragments[0].op_indices.push_back(i);
  const DiagonalObservable parity = parity_observable();
  CHECK(exact_cut_expectation(c, empty, parity) ==
        doctest::Approx(exact_expectation(c, parity)).epsilon(1e-12));
}

TEST_CASE("two sequential cuts stay exactly unbiased") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  groups.push_back(CutGroup{4, {2}, CutMethod::Randomized});
  const CutPlan plan = plan_from_groups(c, groups);
  REQUIRE(plan.fragments.size() == 3);

  const DiagonalObservable parity = parity_observable();
  const double uncut = oracle::brute_force_expectation(c, parity);
  CHECK(exact_cut_expectation(c, plan, parity) ==
        doctest::Approx(uncut).epsilon(1e-10));
}

TEST_CASE("exact cut expectation rejects the pauli method") {
  const Circuit c = bell_circuit();
  const CutPlan plan = plan_bipartition(c, {0}, {0, 1}, CutMethod::Pauli);
  CHECK_THROWS_AS(exact_cut_expectation(c, plan, parity_observable()),
                  ValidationError);
}

TEST_CASE("qtilde is a distribution that dominates q / 5^k") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  const CutPlan plan = plan_from_groups(c, groups);

  const auto qt = exact_qtilde(c, plan);
  double total = 0.0;
  for (double p : qt) total += p;
  CHECK(std::abs(total - 1.0) <= 1e-10);

  const auto q = exact_distribution(c);
  const double factor = std::pow(5.0, plan.total_cut_wires());
  for (std::size_t x = 0; x < q.size(); ++x)
    CHECK(qt[x] >= q[x] / factor - 1e-10);
}

TEST_CASE("uncut sampling reproduces the exact distribution") {
  const Circuit c = chain3_circuit();
  CutPlan empty;
  empty.fragments.push_back(Fragment{});
  for (std::size_t i = 0; i < c.ops.size(); ++i)
    if (std::holds_alternative<Gate>(c.ops[i]))
      empty.fragments[0].op_indices.push_back(i);

  ShotOptions opt;
  opt.shots = 100000;
  opt.seed = 5;
  const auto samples = sample_cut(c, empty, opt);
  const auto q = exact_distribution(c);
  std::vector<int> counts(q.size(), 0);
  for (std::uint64_t s : samples) ++counts[s];
  for (std::size_t x = 0; x < q.size(); ++x) {
    const double sigma = std::sqrt(q[x] * (1.0 - q[x]) / opt.shots);
    CHECK(std::abs(counts[x] / static_cast<double>(opt.shots) - q[x]) <=
          5.0 * sigma + 1e-9);
  }
}

TEST_CASE("cut sampling matches the exact qtilde distribution") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  const CutPlan plan = plan_from_groups(c, groups);

  ShotOptions opt;
  opt.shots = 100000;
  opt.seed = 6;
  const auto samples = sample_cut(c, plan, opt);
  const auto qt = exact_qtilde(c, plan);
  std::vector<int> counts(qt.size(), 0);
  for (std::uint64_t s : samples) ++counts[s];
  for (std::size_t x = 0; x < qt.size(); ++x) {
    const double sigma = std::sqrt(qt[x] * (1.0 - qt[x]) / opt.shots);
    CHECK(std::abs(counts[x] / static_cast<double>(opt.shots) - qt[x]) <=
          5.0 * sigma + 1e-9);
  }
}

TEST_CASE("estimates are identical across worker counts") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  groups.push_back(CutGroup{4, {2}, CutMethod::Pauli});
  const CutPlan plan = plan_from_groups(c, groups);

  ShotOptions one;
  one.shots = 20000;
  one.seed = 99;
  one.workers = 1;
  ShotOptions four = one;
  four.workers = 4;
  const Estimate e1 = estimate(c, plan, parity_observable(), one);
  const Estimate e4 = estimate(c, plan, parity_observable(), four);
  CHECK(e1.mean == e4.mean);
  CHECK(e1.std_error == e4.std_error);

  const auto s1 = sample_cut(c, plan, one);
  const auto s4 = sample_cut(c, plan, four);
  CHECK(s1 == s4);
}

TEST_CASE("mixed-method plans stay statistically unbiased") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Pauli});
  const CutPlan plan = plan_from_groups(c, groups);
  const DiagonalObservable parity = parity_observable();
  ShotOptions opt;
  opt.shots = 200000;
  opt.seed = 13;
  const Estimate e = estimate(c, plan, parity, opt);
  const double exact = exact_expectation(c, parity);
  CHECK(std::abs(e.mean - exact) <= 4.0 * e.std_error);
  CHECK(e.per_shot_bound == 4.0);
}

TEST_CASE("plan json round-trips against its circuit") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  groups.push_back(CutGroup{4, {2}, CutMethod::Pauli});
  const CutPlan plan = plan_from_groups(c, groups);
  const CutPlan back = plan_from_json(plan_to_json(plan), c);
  REQUIRE(back.groups.size() == plan.groups.size());
  for (std::size_t i = 0; i < plan.groups.size(); ++i) {
    CHECK(back.groups[i].position == plan.groups[i].position);
    CHECK(back.groups[i].wires == plan.groups[i].wires);
    CHECK(back.groups[i].method == plan.groups[i].method);
  }
  CHECK(back.fragments.size() == plan.fragments.size());
}

TEST_CASE("plans that miss a crossing wire are invalid") {
  const Circuit c = chain3_circuit();
  CutPlan plan;
  plan.groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  Fragment a, b;
  a.op_indices = {0, 1};
  b.op_indices = {2, 3, 4};
  a.support = {0, 1};
  b.support = {1, 2};
  plan.fragments = {a, b};
  // Group at position 2 severs wire 1 between ops 1 and 2, but op 3 also
  // touches wire 1 from fragment b; moving the group later breaks it.
  CHECK_NOTHROW(validate_plan(c, plan));
  plan.groups[0].position = 1;
  CHECK_THROWS_AS(validate_plan(c, plan), ValidationError);
}

TEST_CASE("fragment attachments track the communication structure") {
  const Circuit c = chain3_circuit();
  std::vector<CutGroup> groups;
  groups.push_back(CutGroup{2, {1}, CutMethod::Randomized});
  groups.push_back(CutGroup{4, {2}, CutMethod::Randomized});
  const CutPlan plan = plan_from_groups(c, groups);
  REQUIRE(plan.fragments.size() == 3);
  CHECK(plan.single_device_recyclable);  // a chain is acyclic
  CHECK(plan.fragments[0].outgoing_groups == std::vector<int>{0});
  CHECK(plan.fragments[1].incoming_groups == std::vector<int>{0});
  CHECK(plan.fragments[1].outgoing_groups == std::vector<int>{1});
  CHECK(plan.fragments[2].incoming_groups == std::vector<int>{1});
}
