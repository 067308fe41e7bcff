// Copyright 2026 The cc832 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <map>
#include <set>

#include "cc832/builders.hpp"
#include "cc832/codes.hpp"
#include "cc832/engine.hpp"
#include "cc832/faults.hpp"
#include "cc832/runner.hpp"

using namespace cc832;

namespace {

std::map<int, double> accepted_distribution(const Circuit& c, double* accept_prob) {
  std::map<int, double> dist;
  double acc = 0;
  auto set = enumerate_branches_sv(c, {}, {});
  for (const auto& b : set.branches) {
    if (!b.accepted) continue;
    acc += b.probability;
    dist[c.eval_readout(b.records).outcome_bits()] += b.probability;
  }
  if (accept_prob) *accept_prob = acc;
  return dist;
}

}  // namespace

TEST_CASE("structural counts") {
  CHECK(build_nonft_adder().two_qubit_gate_count() == 5);
  CHECK(build_nonft_adder().measurement_count() == 3);
  CHECK(build_nonft_preparation().two_qubit_gate_count() == 10);
  CHECK(build_ft_preparation().two_qubit_gate_count() == 18);
  CHECK(build_ft_preparation().measurement_count() == 2);
  CHECK(build_ft_adder().two_qubit_gate_count() == 24);
  CHECK(build_ft_adder().measurement_count() == 12);
  CHECK(build_planar_ft_adder().two_qubit_gate_count() == 34);
  CHECK(build_planar_ft_adder().measurement_count() == 12);
  auto [gx, mx] = generic_prep_baseline_counts();
  CHECK(gx == 32);
  CHECK(mx == 8);
}

TEST_CASE("both adders produce the uniform valid-sum distribution") {
  for (const char* name : {"nonft_adder", "ft_adder"}) {
    double acc = 0;
    auto dist = accepted_distribution(circuit_by_name(name), &acc);
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(dist.size() == 4);
    for (int bits : {0b000, 0b010, 0b101, 0b110}) {
      CHECK(dist.at(bits) == doctest::Approx(0.25).epsilon(1e-12));
      int a = (bits >> 2) & 1, s0 = (bits >> 1) & 1, s1 = bits & 1;
      CHECK(!arithmetic_error(a, s0 + 2 * s1));
    }
  }
}

TEST_CASE("the verified preparation outputs the exact logical plus state") {
  Circuit prep = build_ft_preparation();
  auto set = enumerate_branches_tab(prep, {}, {});
  CodeSpec cube = code_832();
  int accepted = 0;
  for (const auto& b : set.branches) {
    if (!b.accepted) continue;
    accepted++;
    for (const auto& s : cube.stabilizers)
      CHECK(b.state.stabilizes(PauliString(10, s.x, s.z, s.neg())));
    for (const auto& l : cube.logical_x)
      CHECK(b.state.stabilizes(PauliString(10, l.x, l.z, l.neg())));
  }
  CHECK(accepted >= 1);
  // Noiseless checks always pass: nothing is rejected.
  double acc = 0;
  for (const auto& b : set.branches) acc += b.accepted ? b.probability : 0.0;
  CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("frozen preparation is minimal: regression against the search") {
  // The full search runs in the acceptance suite; here the frozen circuit is
  // checked to reach the target exactly with its declared 10 CNOTs.
  Circuit prep = build_nonft_preparation();
  StabilizerState st(8);
  for (const auto& in : prep.instructions) st.apply_gate(in.gate, in.qubits);
  CHECK(st.canonical_key() == code_832().plus_state().canonical_key());
}

TEST_CASE("the planar build respects the lattice") {
  Circuit planar = build_planar_ft_adder();
  CHECK(planar_adjacency_violation(planar, planar_layout()).empty());
}

TEST_CASE("planar semantics match the all-to-all adder") {
  double acc = 0;
  auto dist = accepted_distribution(circuit_by_name("planar_ft_adder"), &acc);
  CHECK(acc == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(dist.size() == 4);
  for (int bits : {0b000, 0b010, 0b101, 0b110})
    CHECK(dist.at(bits) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("teleported Hadamards act exactly on the logical algebra") {
  ChannelSpec dbl;
  dbl.hadamard = {true, true, false};
  ChannelCheck c1 = verify_channel(circuit_by_name("hadamard_double"), dbl);
  CHECK(c1.ok);
  CHECK(c1.accepted_probability > 0.0);

  ChannelSpec single;
  single.hadamard = {false, true, false};
  ChannelCheck c2 = verify_channel(circuit_by_name("hadamard_single"), single);
  CHECK(c2.ok);

  // The wrong expectation fails.
  ChannelSpec wrong;
  wrong.hadamard = {true, false, false};
  CHECK(!verify_channel(circuit_by_name("hadamard_single"), wrong).ok);
}

TEST_CASE("registry names are stable") {
  std::vector<std::string> names;
  for (const auto& [n, b] : named_circuits()) names.push_back(n);
  CHECK(names == std::vector<std::string>{"ft_adder", "ft_prep", "hadamard_double",
                                          "hadamard_single", "nonft_adder", "nonft_prep",
                                          "planar_ft_adder"});
  CHECK_THROWS_AS(circuit_by_name("nope"), std::invalid_argument);
}

TEST_CASE("adder readout bit order matches the valid-sum partition") {
  // The green set under the (a, s0, s1) bit order.
  std::set<int> green;
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++) {
      int sum = a + b;
      int s0 = sum & 1, s1 = (sum >> 1) & 1;
      green.insert((a << 2) | (s0 << 1) | s1);
    }
  CHECK(green == std::set<int>{0b000, 0b010, 0b101, 0b110});
}
