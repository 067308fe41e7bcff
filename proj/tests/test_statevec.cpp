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

#include <cmath>

#include "cc832/builders.hpp"
#include "cc832/circuit.hpp"
#include "cc832/codes.hpp"
#include "cc832/engine.hpp"
#include "cc832/statevec.hpp"

using namespace cc832;

namespace {

// Encoded computational basis state |b2 b1 b0> of the cube code via the
// GHZ encoder plus logical X flips.
StateVector encoded_basis(int bits) {
  CodeSpec cube = code_832();
  StateVector sv(8);
  sv.apply_h(0);
  for (uint32_t q = 1; q < 8; q++) sv.apply_cx(0, q);
  for (uint32_t i = 0; i < 3; i++) {
    if ((bits >> i) & 1) {
      for (uint32_t q = 0; q < 8; q++)
        if (cube.logical_x[i].x_bit(q)) sv.apply_x(q);
    }
  }
  return sv;
}

void apply_t_layer(StateVector& sv, const std::vector<uint32_t>& t_positions) {
  for (uint32_t q = 0; q < 8; q++) {
    bool plus = false;
    for (uint32_t p : t_positions) plus = plus || p == q;
    if (plus) {
      sv.apply_t(q);
    } else {
      sv.apply_tdg(q);
    }
  }
}

// Does the T/Tdg pattern implement the logical CCZ exactly?
bool pattern_is_logical_ccz(const std::vector<uint32_t>& t_positions) {
  for (int bits = 0; bits < 8; bits++) {
    StateVector in = encoded_basis(bits);
    StateVector out = in;
    apply_t_layer(out, t_positions);
    std::complex<double> ip{0, 0};
    for (size_t i = 0; i < in.dim(); i++) ip += std::conj(in.amplitudes()[i]) * out.amplitudes()[i];
    std::complex<double> want = bits == 7 ? std::complex<double>{-1, 0} : std::complex<double>{1, 0};
    if (std::abs(ip - want) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("CCZ phases") {
  StateVector sv(3);
  sv.apply_x(1);
  sv.apply_x(2);  // |110> with qubit0 the low bit? index bits: q1,q2 set
  sv.apply_ccz(0, 1, 2);
  CHECK(sv.amplitudes()[6].real() == doctest::Approx(1.0));
  sv.apply_x(0);  // now |111>
  sv.apply_ccz(0, 1, 2);
  CHECK(sv.amplitudes()[7].real() == doctest::Approx(-1.0));
}

TEST_CASE("four T gates make a Z") {
  StateVector sv(1);
  sv.apply_h(0);  // |+>
  for (int i = 0; i < 4; i++) sv.apply_t(0);
  StateVector minus(1);
  minus.apply_x(0);
  minus.apply_h(0);  // |->
  CHECK(fidelity(sv, minus) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("measurement probabilities and collapse") {
  StateVector sv(1);
  sv.apply_x(0);
  CHECK(sv.prob_one(0, 'Z') == doctest::Approx(1.0));
  StateVector s0(1);
  CHECK(s0.prob_one(0, 'X') == doctest::Approx(0.5));
  double p = s0.collapse(0, 'X', 1);
  CHECK(p == doctest::Approx(0.5));
  CHECK(s0.prob_one(0, 'X') == doctest::Approx(1.0));
}

TEST_CASE("norm is preserved to 1e-10 through long circuits") {
  RngStream rng(13, 0);
  StateVector sv(5);
  const char* names[] = {"H", "S", "T", "TDG", "X", "Y", "Z"};
  for (int i = 0; i < 300; i++) {
    if (rng.next_below(3) == 0) {
      uint32_t a = uint32_t(rng.next_below(5)), b = uint32_t(rng.next_below(4));
      if (b >= a) b++;
      sv.apply_cx(a, b);
    } else {
      sv.apply_gate(names[rng.next_below(7)], {uint32_t(rng.next_below(5))});
    }
  }
  CHECK(std::abs(sv.norm_sq() - 1.0) < 1e-10);
}

TEST_CASE("branch probabilities sum to one") {
  RngStream rng(14, 0);
  for (int t = 0; t < 100; t++) {
    uint32_t n = 2 + uint32_t(rng.next_below(3));
    Circuit c(n);
    const char* names[] = {"H", "S", "T", "X"};
    for (int i = 0; i < 10; i++) {
      if (n >= 2 && rng.next_below(3) == 0) {
        uint32_t a = uint32_t(rng.next_below(n)), b = uint32_t(rng.next_below(n - 1));
        if (b >= a) b++;
        c.cx(a, b);
      } else {
        c.gate(names[rng.next_below(4)], {uint32_t(rng.next_below(n))});
      }
    }
    for (uint32_t q = 0; q < n; q++) c.measure(q, rng.next_bool() ? 'X' : 'Z');
    auto set = enumerate_branches_sv(c, {}, {});
    double total = 0;
    for (const auto& b : set.branches) total += b.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("applying a stabilizer of the state fixes it") {
  // The encoded |000> is stabilized by every Z-type generator and X(x)8.
  StateVector sv = encoded_basis(0);
  StateVector fixed = sv;
  CodeSpec cube = code_832();
  for (const auto& s : cube.stabilizers) {
    StateVector probe = sv;
    probe.apply_pauli(s);
    CHECK(fidelity(probe, fixed) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("qubit cap enforced") {
  CHECK_THROWS_AS(StateVector(17), std::invalid_argument);
}

TEST_CASE("branch cap raises a resource error") {
  Circuit c(10);
  for (uint32_t q = 0; q < 10; q++) c.h(q);
  for (uint32_t q = 0; q < 10; q++) c.measure(q, 'Z');
  BranchOptions opts;
  opts.branch_cap = 64;
  CHECK_THROWS_AS(enumerate_branches_sv(c, {}, opts), ResourceError);
}

TEST_CASE("the frozen T pattern is the logical CCZ, found by search") {
  CHECK(pattern_is_logical_ccz(ccz_t_positions()));
  // Flipping any single sign breaks it.
  for (uint32_t q = 0; q < 8; q++) {
    std::vector<uint32_t> variant;
    bool in = false;
    for (uint32_t p : ccz_t_positions()) {
      if (p == q) in = true;
      else variant.push_back(p);
    }
    if (!in) variant.push_back(q);
    CHECK(!pattern_is_logical_ccz(variant));
  }
  // Exhaustive search over all 256 sign patterns finds the frozen one.
  bool found = false;
  int valid_count = 0;
  for (int mask = 0; mask < 256; mask++) {
    std::vector<uint32_t> pos;
    for (uint32_t q = 0; q < 8; q++)
      if ((mask >> q) & 1) pos.push_back(q);
    if (pattern_is_logical_ccz(pos)) {
      valid_count++;
      uint32_t frozen_mask = 0;
      for (uint32_t p : ccz_t_positions()) frozen_mask |= 1u << p;
      found = found || (uint32_t(mask) == frozen_mask);
    }
  }
  CHECK(found);
  CHECK(valid_count >= 1);
}

TEST_CASE("fidelity is symmetric and normalized") {
  StateVector a(2), b(2);
  b.apply_x(0);
  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(fidelity(a, b) == doctest::Approx(0.0));
  a.apply_h(0);
  CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)));
}

TEST_CASE("sampled Clifford distributions match the tableau engine") {
  // Chi-squared over the exact branch probabilities.
  RngStream rng(15, 0);
  for (int t = 0; t < 3; t++) {
    uint32_t n = 4;
    Circuit c(n);
    const char* names[] = {"H", "S", "X"};
    for (int i = 0; i < 12; i++) {
      if (rng.next_below(3) == 0) {
        uint32_t a = uint32_t(rng.next_below(n)), b = uint32_t(rng.next_below(n - 1));
        if (b >= a) b++;
        c.cx(a, b);
      } else {
        c.gate(names[rng.next_below(3)], {uint32_t(rng.next_below(n))});
      }
    }
    for (uint32_t q = 0; q < n; q++) c.measure(q, 'Z');
    auto exact = enumerate_branches_sv(c, {}, {});
    std::map<int, double> probs;
    for (const auto& b : exact.branches) {
      int key = 0;
      for (size_t i = 0; i < b.records.size(); i++) key |= b.records[i] << i;
      probs[key] += b.probability;
    }
    // Sample 10^4 shots on the tableau engine.
    std::map<int, int> counts;
    const int shots = 10000;
    for (int s = 0; s < shots; s++) {
      RngStream srng(100 + t, uint64_t(s));
      StabilizerState st(n);
      int key = 0;
      int reci = 0;
      for (const auto& in : c.instructions) {
        if (in.op == Op::kGate) {
          st.apply_gate(in.gate, in.qubits);
        } else if (in.op == Op::kMeasure) {
          auto m = st.measure_qubit(in.qubits[0], in.basis, std::nullopt, srng);
          key |= m.outcome << reci++;
        }
      }
      counts[key]++;
    }
    double chi2 = 0;
    int dof = -1;
    for (auto& [key, p] : probs) {
      if (p < 1e-12) continue;
      double expect = p * shots;
      double diff = counts[key] - expect;
      chi2 += diff * diff / expect;
      dof++;
    }
    // Generous threshold: p ~ 1e-4 for dof <= 15.
    CHECK(chi2 < 40.0 + 3.0 * dof);
  }
}
