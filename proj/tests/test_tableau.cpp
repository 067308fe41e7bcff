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

#include "cc832/codes.hpp"
#include "cc832/statevec.hpp"
#include "cc832/tableau.hpp"

using namespace cc832;

namespace {

// Random Clifford circuit as (gate, qubits) list.
struct RandomCircuit {
  std::vector<std::pair<std::string, std::vector<uint32_t>>> gates;
};

RandomCircuit random_clifford(uint32_t n, int len, RngStream& rng) {
  RandomCircuit c;
  const char* one[] = {"H", "S", "SDG", "X", "Y", "Z"};
  for (int i = 0; i < len; i++) {
    if (n >= 2 && rng.next_below(3) == 0) {
      uint32_t a = uint32_t(rng.next_below(n)), b = uint32_t(rng.next_below(n - 1));
      if (b >= a) b++;
      c.gates.push_back({rng.next_bool() ? "CX" : "CZ", {a, b}});
    } else {
      c.gates.push_back({one[rng.next_below(6)], {uint32_t(rng.next_below(n))}});
    }
  }
  return c;
}

}  // namespace

TEST_CASE("H maps the Z stabilizer to X") {
  StabilizerState st(1);
  st.apply_h(0);
  CHECK(st.stabilizes(PauliString::parse("X")));
}

TEST_CASE("CX conjugation grows X off the control and Z off the target") {
  StabilizerState st = StabilizerState::from_generators(
      2, {PauliString::parse("XI"), PauliString::parse("IZ")});
  st.apply_cx(0, 1);
  CHECK(st.stabilizes(PauliString::parse("XX")));
  CHECK(st.stabilizes(PauliString::parse("ZZ")));
}

TEST_CASE("measurement basics") {
  RngStream rng(3, 0);
  StabilizerState st(1);
  auto m = st.measure_qubit(0, 'Z', std::nullopt, rng);
  CHECK(m.deterministic);
  CHECK(m.outcome == 0);

  st.apply_h(0);  // |+>
  PauliString z = PauliString::parse("Z");
  CHECK(st.measurement_random(z));
  auto m1 = st.measure_pauli(z, 1, rng);
  CHECK(!m1.deterministic);
  CHECK(m1.outcome == 1);
  // Repeating the same measurement is deterministic with the same value.
  auto m2 = st.measure_pauli(z, std::nullopt, rng);
  CHECK(m2.deterministic);
  CHECK(m2.outcome == 1);
  // Forcing the opposite deterministic value is a contradiction.
  CHECK_THROWS_AS(st.measure_pauli(z, 0, rng), std::runtime_error);
}

TEST_CASE("the all-X stabilizer is deterministic on the encoded plus state") {
  CodeSpec cube = code_832();
  StabilizerState st = cube.plus_state();
  RngStream rng(4, 0);
  auto m = st.measure_pauli(PauliString::parse("XXXXXXXX"), std::nullopt, rng);
  CHECK(m.deterministic);
  CHECK(m.outcome == 0);
}

TEST_CASE("canonical keys identify states, not presentations") {
  auto bell1 = StabilizerState::from_generators(
      2, {PauliString::parse("XX"), PauliString::parse("ZZ")});
  auto bell2 = StabilizerState::from_generators(
      2, {PauliString::parse("XX"), PauliString::parse("-YY")});
  CHECK(bell1.canonical_key() == bell2.canonical_key());

  auto s00 = StabilizerState(2);
  auto s0p = StabilizerState(2);
  s0p.apply_h(1);
  CHECK(s00.canonical_key() != s0p.canonical_key());
}

TEST_CASE("exactly six single-qubit stabilizer states") {
  // Brute-force oracle: every single-qubit stabilizer state is the +1
  // eigenstate of one signed Pauli.
  std::set<CanonicalKey> keys;
  for (const char* l : {"X", "Y", "Z"}) {
    for (bool neg : {false, true}) {
      PauliString g = PauliString::parse(l);
      g.set_sign(neg);
      keys.insert(StabilizerState::from_generators(1, {g}).canonical_key());
    }
  }
  CHECK(keys.size() == 6);
}

TEST_CASE("canonical key is invariant under generator re-presentation") {
  RngStream rng(5, 0);
  int trials = 0;
  for (int t = 0; t < 100; t++) {
    uint32_t n = 2 + uint32_t(rng.next_below(5));  // up to 6 qubits
    StabilizerState st(n);
    auto rc = random_clifford(n, 20, rng);
    for (auto& [g, qs] : rc.gates) st.apply_gate(g, qs);
    CanonicalKey key = st.canonical_key();
    std::vector<PauliString> gens;
    for (uint32_t i = 0; i < n; i++) gens.push_back(st.stabilizer(i));
    for (int rep = 0; rep < 10; rep++) {
      // Random re-presentation: multiply a random pair, then shuffle.
      uint32_t i = uint32_t(rng.next_below(n)), j = uint32_t(rng.next_below(n));
      if (i != j) gens[i] = pauli_mul(gens[i], gens[j]);
      for (uint32_t k = n - 1; k > 0; k--)
        std::swap(gens[k], gens[rng.next_below(k + 1)]);
      CHECK(StabilizerState::from_generators(n, gens).canonical_key() == key);
      trials++;
    }
  }
  CHECK(trials == 1000);
}

TEST_CASE("cross-engine agreement on deterministic measurements") {
  RngStream rng(6, 0);
  for (int t = 0; t < 200; t++) {
    uint32_t n = 2 + uint32_t(rng.next_below(4));  // up to 5 qubits
    auto rc = random_clifford(n, 15, rng);
    StabilizerState tab(n);
    StateVector sv(n);
    for (auto& [g, qs] : rc.gates) {
      tab.apply_gate(g, qs);
      sv.apply_gate(g, qs);
    }
    for (int m = 0; m < 3; m++) {
      uint32_t q = uint32_t(rng.next_below(n));
      char basis = rng.next_bool() ? 'X' : 'Z';
      double p1 = sv.prob_one(q, basis);
      bool sv_det = p1 < 1e-9 || p1 > 1.0 - 1e-9;
      PauliString p = PauliString::single(n, basis, q);
      bool tab_det = !tab.measurement_random(p);
      CHECK(sv_det == tab_det);
      int forced;
      if (tab_det) {
        auto r = tab.measure_pauli(p, std::nullopt, rng);
        CHECK(r.outcome == (p1 > 0.5 ? 1 : 0));
        forced = r.outcome;
      } else {
        forced = int(rng.next_bool());
        tab.measure_pauli(p, forced, rng);
      }
      sv.collapse(q, basis, forced);
    }
  }
}

TEST_CASE("restricted generators extract pure subsystems") {
  // Bell pair on (0,2) times |0> on 1.
  StabilizerState st(3);
  st.apply_h(0);
  st.apply_cx(0, 2);
  auto sub = st.restricted_generators({0, 2});
  REQUIRE(sub.has_value());
  CHECK(sub->size() == 2);
  auto bell = StabilizerState::from_generators(2, *sub);
  CHECK(bell.stabilizes(PauliString::parse("XX")));
  CHECK(bell.stabilizes(PauliString::parse("ZZ")));
  // Half of an entangled pair is not pure.
  CHECK(!st.restricted_generators({0, 1}).has_value());
}

TEST_CASE("pauli_from recovers the relating Pauli") {
  RngStream rng(11, 0);
  for (int t = 0; t < 50; t++) {
    uint32_t n = 2 + uint32_t(rng.next_below(4));
    StabilizerState ref(n);
    auto rc = random_clifford(n, 12, rng);
    for (auto& [g, qs] : rc.gates) ref.apply_gate(g, qs);
    PauliString e(n);
    e.x = rng.next_u64() & e.mask();
    e.z = rng.next_u64() & e.mask();
    StabilizerState out = ref;
    out.apply_pauli(e);
    auto rec = out.pauli_from(ref);
    REQUIRE(rec.has_value());
    // The recovered Pauli acts on ref exactly like e (they may differ by a
    // stabilizer of ref).
    StabilizerState check = ref;
    check.apply_pauli(*rec);
    CHECK(check.canonical_key() == out.canonical_key());
  }
}
