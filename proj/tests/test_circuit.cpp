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
#include <sstream>

#include "cc832/builders.hpp"
#include "cc832/circuit.hpp"
#include "cc832/engine.hpp"

using namespace cc832;

TEST_CASE("serialize/deserialize round-trips every registry circuit") {
  for (const auto& [name, built] : named_circuits()) {
    Circuit back = deserialize(serialize(built.circuit));
    CHECK(back == built.circuit);
  }
}

TEST_CASE("parse errors carry a position") {
  Circuit c(2);
  c.h(0);
  std::string doc = serialize(c);
  std::string bad = doc;
  bad.replace(bad.find("\"H\""), 3, "\"Q\"");
  CHECK_THROWS_WITH_AS(deserialize(bad) /**/,
                       doctest::Contains("instruction 0"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("not json"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("{\"version\": 9}"), std::invalid_argument);
}

TEST_CASE("declared counts match recomputed counts") {
  for (const auto& [name, built] : named_circuits()) {
    CHECK(built.circuit.two_qubit_gate_count() == built.declared_two_qubit_gates);
    CHECK(built.circuit.measurement_count() == built.declared_measurements);
  }
}

TEST_CASE("the exported adder lists exactly 24 two-qubit gate lines") {
  std::string text = export_qasm_like(circuit_by_name("ft_adder"));
  std::istringstream in(text);
  std::string line;
  int two_qubit = 0;
  while (std::getline(in, line)) {
    if (line.rfind("cx ", 0) == 0 || line.rfind("cz ", 0) == 0 || line.rfind("swap ", 0) == 0)
      two_qubit++;
  }
  CHECK(two_qubit == 24);
}

TEST_CASE("relabeling as transport or as SWAPs changes counts, not semantics") {
  Circuit transport = circuit_by_name("ft_adder");
  // Realize every permute instruction with SWAP gates instead.
  Circuit swapped(transport.n_qubits);
  swapped.name = transport.name + "_swapped";
  for (const auto& in : transport.instructions) {
    if (in.op == Op::kPermute) {
      std::vector<uint32_t> cur(in.perm.size());
      for (uint32_t q = 0; q < cur.size(); q++) cur[q] = q;
      for (uint32_t q = 0; q < cur.size(); q++) {
        while (cur[q] != in.perm[q]) {
          uint32_t want = in.perm[q];
          uint32_t where = 0;
          for (uint32_t k = 0; k < cur.size(); k++)
            if (cur[k] == want) where = k;
          swapped.swap(q, where);
          std::swap(cur[q], cur[where]);
        }
      }
    } else {
      swapped.instructions.push_back(in);
    }
  }
  swapped.postselect = transport.postselect;
  swapped.readout = transport.readout;
  CHECK(swapped.two_qubit_gate_count() > transport.two_qubit_gate_count());

  auto dist = [](const Circuit& c) {
    std::map<int, double> d;
    auto set = enumerate_branches_sv(c, {}, {});
    for (const auto& b : set.branches) {
      REQUIRE(b.accepted);
      d[c.eval_readout(b.records).outcome_bits()] += b.probability;
    }
    return d;
  };
  auto d1 = dist(transport), d2 = dist(swapped);
  REQUIRE(d1.size() == d2.size());
  for (auto& [k, p] : d1) CHECK(d2[k] == doctest::Approx(p).epsilon(1e-9));
}

TEST_CASE("validation rejects malformed circuits") {
  Circuit dup(2);
  CHECK_THROWS_AS(dup.gate("CX", {1, 1}), std::invalid_argument);
  Circuit range(2);
  range.cx(0, 1);
  range.instructions[0].qubits[1] = 7;
  CHECK_THROWS_AS(range.validate(), std::invalid_argument);
  Circuit perm(3);
  perm.permute({0, 1, 2});
  perm.instructions[0].perm = {0, 0, 1};
  CHECK_THROWS_AS(perm.validate(), std::invalid_argument);
  Circuit pred(2);
  pred.measure(0, 'Z');
  pred.post_select({3}, "bad");
  CHECK_THROWS_AS(pred.validate(), std::invalid_argument);
}

TEST_CASE("readout evaluation takes parities") {
  Circuit c(3);
  int r0 = c.measure(0, 'Z');
  int r1 = c.measure(1, 'Z');
  int r2 = c.measure(2, 'X');
  c.readout.defined = true;
  c.readout.a = {r0, r1};
  c.readout.s0 = {r1};
  c.readout.s1 = {r2};
  ReadoutValue v = c.eval_readout({1, 1, 1});
  CHECK(v.a == 0);
  CHECK(v.s0 == 1);
  CHECK(v.s1 == 1);
  CHECK(v.s() == 3);
}
