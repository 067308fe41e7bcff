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

#include "cc832/builders.hpp"
#include "cc832/codes.hpp"
#include "cc832/synth.hpp"

using namespace cc832;

namespace {

// Independent oracle: smallest (moves + endpoint Bell pairs) over plain
// enumeration of all CNOT sequences up to the given depth.
int oracle_min_total(const StabilizerState& target, int max_depth) {
  uint32_t n = target.num_qubits();
  std::vector<std::pair<uint32_t, uint32_t>> moves;
  for (uint32_t c = 0; c < n; c++)
    for (uint32_t t = 0; t < n; t++)
      if (c != t) moves.push_back({c, t});
  int best = 1 << 20;
  auto walk = [&](auto&& self, StabilizerState st, int depth) -> void {
    if (is_block_product(st)) best = std::min(best, depth + bell_pair_count(st));
    if (depth == max_depth || depth + 1 >= best) return;
    for (auto [c, t] : moves) {
      StabilizerState next = st;
      next.apply_cx(c, t);
      self(self, std::move(next), depth + 1);
    }
  };
  walk(walk, target, 0);
  return best;
}

StabilizerState random_state(uint32_t n, RngStream& rng) {
  StabilizerState st(n);
  const char* one[] = {"H", "S", "X"};
  for (int i = 0; i < 14; i++) {
    if (n >= 2 && rng.next_below(3) == 0) {
      uint32_t a = uint32_t(rng.next_below(n)), b = uint32_t(rng.next_below(n - 1));
      if (b >= a) b++;
      st.apply_cx(a, b);
    } else {
      st.apply_gate(one[rng.next_below(3)], {uint32_t(rng.next_below(n))});
    }
  }
  return st;
}

}  // namespace

TEST_CASE("a Bell pair needs no search moves and one CNOT") {
  auto bell =
      StabilizerState::from_generators(2, {PauliString::parse("XX"), PauliString::parse("ZZ")});
  SynthResult r = min_cnot_prep(bell, is_block_product, {});
  CHECK(r.moves.empty());
  CHECK(r.endpoint_bell_pairs == 1);
  CHECK(r.total_cnots == 1);
}

TEST_CASE("GHZ3 costs two CNOTs") {
  auto ghz = StabilizerState::from_generators(
      3, {PauliString::parse("XXX"), PauliString::parse("ZZI"), PauliString::parse("IZZ")});
  CHECK(oracle_min_total(ghz, 4) == 2);
  SynthResult r = min_cnot_prep(ghz, is_block_product, {});
  CHECK(r.total_cnots == 2);
  CHECK(r.moves.size() == 1);
  CHECK(r.endpoint_bell_pairs == 1);
}

TEST_CASE("search minima agree with plain enumeration on small targets") {
  RngStream rng(31, 0);
  for (int t = 0; t < 30; t++) {
    uint32_t n = 2 + uint32_t(rng.next_below(2));
    StabilizerState target = random_state(n, rng);
    SynthResult r = min_cnot_prep(target, is_block_product, {});
    CHECK(r.total_cnots == oracle_min_total(target, 4));
  }
}

TEST_CASE("synthesized circuits reproduce the target exactly") {
  RngStream rng(32, 0);
  for (int t = 0; t < 20; t++) {
    StabilizerState target = random_state(4, rng);
    SynthResult r = min_cnot_prep(target, is_block_product, {});
    StabilizerState check(4);
    for (const auto& in : r.prep.instructions) check.apply_gate(in.gate, in.qubits);
    CHECK(check.canonical_key() == target.canonical_key());
  }
}

TEST_CASE("synthesis is deterministic across runs") {
  StabilizerState target = code_422().zero_state();
  SynthResult a = min_cnot_prep(target, is_block_product, {});
  SynthResult b = min_cnot_prep(target, is_block_product, {});
  CHECK(serialize(a.prep) == serialize(b.prep));
  CHECK(a.moves == b.moves);
}

TEST_CASE("resource and exhaustion errors") {
  SynthOptions tiny;
  tiny.node_cap = 2;
  StabilizerState ghz = StabilizerState::from_generators(
      3, {PauliString::parse("XXX"), PauliString::parse("ZZI"), PauliString::parse("IZZ")});
  CHECK_THROWS_AS(min_cnot_prep(ghz, [](const StabilizerState&) { return false; }, tiny),
                  ResourceError);
  SynthOptions roomy;
  CHECK_THROWS_AS(min_cnot_prep(StabilizerState(2),
                                [](const StabilizerState&) { return false; }, roomy),
                  ExhaustionError);
}

TEST_CASE("propagation analysis classifies single faults") {
  // A CNOT fan-out: an X fault on the shared control becomes a weight-2
  // error detected by a ZZ check.
  Circuit prep(3);
  prep.h(0);
  prep.cx(0, 1);
  prep.cx(0, 2);
  StabilizerState target = StabilizerState::from_generators(
      3, {PauliString::parse("XXX"), PauliString::parse("ZZI"), PauliString::parse("IZZ")});
  CodeSpec fake;
  fake.name = "ghz3";
  fake.n = 3;
  fake.k = 1;
  fake.d = 1;
  fake.stabilizers = {PauliString::parse("ZZI"), PauliString::parse("IZZ")};
  fake.logical_x = {PauliString::parse("XXX")};
  fake.logical_z = {PauliString::parse("ZII")};

  auto rep = detectable_error_analysis(
      prep, {PauliString::parse("ZIZ"), PauliString::parse("XXX")}, fake, target);
  CHECK(rep.undetected_logical_count == 0);
  auto bare3 = detectable_error_analysis(prep, {}, fake, target);
  CHECK(bare3.undetected_logical_count > 0);
  bool saw_weight2 = false;
  for (const auto& f : rep.faults) {
    if (f.instr_index == 1 && f.inserted.str() == "+XII") {
      // X on the control before the second CNOT: propagates to X I X.
      CHECK(f.residual.str() == "+XIX");
      CHECK(f.category == ErrorAnalysisReport::kDetected);
      saw_weight2 = true;
    }
  }
  CHECK(saw_weight2);
}

TEST_CASE("the frozen verification pair suffices for the minimal preparation") {
  CodeSpec cube = code_832();
  StabilizerState target = cube.plus_state();
  Circuit prep = build_nonft_preparation();
  // Candidates: every weight-4 X-type and Z-type stabilizer of the target.
  std::vector<PauliString> cands;
  int frozen_x = -1, frozen_z = -1;
  uint64_t frozen_mask = 0;
  for (uint32_t q : prep_check_x_order()) frozen_mask |= 1ull << q;
  for (uint32_t v = 1; v < 255; v++) {
    if (std::popcount(v) != 4) continue;
    PauliString px(8, v, 0, false);
    if (!target.group_value(px)) continue;
    if (v == frozen_mask) frozen_x = int(cands.size());
    cands.push_back(px);
    if (v == frozen_mask) frozen_z = int(cands.size());
    cands.push_back(PauliString(8, 0, v, false));
  }
  REQUIRE(frozen_x >= 0);
  auto rep = detectable_error_analysis(prep, cands, cube, target);
  CHECK(rep.undetected_logical_count == 0);
  // With no candidate checks at all, dangerous faults remain.
  auto bare = detectable_error_analysis(prep, {}, cube, target);
  CHECK(bare.undetected_logical_count > 0);
  // The frozen X check alone covers them; minimal subsets have size 1.
  REQUIRE(!rep.minimal_sufficient_subsets.empty());
  CHECK(rep.minimal_sufficient_subsets[0].size() == 1);
  bool frozen_found = false;
  for (const auto& sub : rep.minimal_sufficient_subsets)
    frozen_found = frozen_found || (sub.size() == 1 && int(sub[0]) == frozen_x);
  CHECK(frozen_found);
  (void)frozen_z;
}
