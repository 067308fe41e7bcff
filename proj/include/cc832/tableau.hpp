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

#ifndef CC832_TABLEAU_HPP
#define CC832_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "cc832/pauli.hpp"
#include "cc832/rng.hpp"

namespace cc832 {

// Presentation-independent identifier of a stabilizer state: two states have
// equal keys iff they are the same quantum state.
using CanonicalKey = std::string;

struct MeasureResult {
  int outcome = 0;  // 0 <-> eigenvalue +1, 1 <-> eigenvalue -1
  bool deterministic = false;
};

// CHP-style tableau: n stabilizer generators plus their destabilizer
// partners, rows bit-packed one word per row.  Value type, freely copyable;
// no operation touches global state.
class StabilizerState {
 public:
  explicit StabilizerState(uint32_t n_qubits);

  // State stabilized by the given n independent, pairwise commuting
  // generators (signs honored); destabilizers are completed internally.
  static StabilizerState from_generators(uint32_t n_qubits, const std::vector<PauliString>& gens);

  uint32_t num_qubits() const { return n_; }

  PauliString stabilizer(uint32_t i) const { return row_pauli(n_ + i); }
  PauliString destabilizer(uint32_t i) const { return row_pauli(i); }

  void apply_h(uint32_t q);
  void apply_s(uint32_t q);
  void apply_sdg(uint32_t q);
  void apply_x(uint32_t q);
  void apply_y(uint32_t q);
  void apply_z(uint32_t q);
  void apply_cx(uint32_t c, uint32_t t);
  void apply_cz(uint32_t a, uint32_t b);
  void apply_swap(uint32_t a, uint32_t b);
  // Relabels qubits: letter at qubit q moves to perm[q].
  void apply_permutation(const std::vector<uint32_t>& perm);
  // Applies a Pauli operator (conjugation only changes row signs).
  void apply_pauli(const PauliString& p);

  // Named-gate dispatch for {H, S, SDG, X, Y, Z, CX, CZ, SWAP}.
  void apply_gate(const std::string& name, const std::vector<uint32_t>& qubits);

  // Projective measurement of an arbitrary Pauli.  If the outcome is random,
  // `forced` (when set) picks it, otherwise `rng` does.  Forcing a
  // deterministic measurement to the opposite value throws.
  MeasureResult measure_pauli(const PauliString& p, std::optional<int> forced, RngStream& rng);

  // Measures qubit q in the Z (basis='Z') or X (basis='X') basis.
  MeasureResult measure_qubit(uint32_t q, char basis, std::optional<int> forced, RngStream& rng);

  // True iff measuring p would give a uniformly random outcome.
  bool measurement_random(const PauliString& p) const {
    for (uint32_t i = n_; i < 2 * n_; i++)
      if (row_anticommutes(i, p)) return true;
    return false;
  }

  // Resets qubit q to |0> (measure Z, flip if needed).
  void reset_qubit(uint32_t q, RngStream& rng);

  // If p (ignoring its sign) lies in the stabilizer group, returns the bit b
  // such that (-1)^b * |p-with-positive-sign| is stabilized; otherwise
  // nullopt.  Does not modify the state.
  std::optional<int> group_value(const PauliString& p) const;

  // True iff signed p stabilizes the state.
  bool stabilizes(const PauliString& p) const;

  CanonicalKey canonical_key() const;

  // Canonical key of the subgroup supported on `qubits`, relabeled to
  // 0..|qubits|-1.  For a state that is pure on that subset this identifies
  // the reduced state.
  CanonicalKey canonical_key_on(const std::vector<uint32_t>& qubits) const;

  // Generators of the subgroup supported on `qubits`, relabeled.  Returns
  // nullopt if the subgroup rank is below |qubits| (subset not pure).
  std::optional<std::vector<PauliString>> restricted_generators(const std::vector<uint32_t>& qubits) const;

  // Pauli E such that E|ref> = |this> up to global phase, or nullopt when the
  // two states are not Pauli-related.  Both states must have equal n.
  std::optional<PauliString> pauli_from(const StabilizerState& ref) const;

  std::string str() const;

 private:
  PauliString row_pauli(uint32_t r) const;
  // row[h] <- row[h] * row[i], tracking phase mod 4.
  void row_mult(uint32_t h, uint32_t i);
  bool row_anticommutes(uint32_t r, const PauliString& p) const {
    return ((std::popcount(xs_[r] & p.z) ^ std::popcount(zs_[r] & p.x)) & 1) != 0;
  }

  uint32_t n_;
  // Rows 0..n-1: destabilizers; rows n..2n-1: stabilizers.
  std::vector<uint64_t> xs_, zs_;
  std::vector<uint8_t> rs_;  // phase exponent of i, mod 4 (even on stabilizer rows)
};

// Canonical row-echelon form of a generating set (used for keys and for
// subgroup extraction); exposed for tests.
std::vector<PauliString> stabilizer_rref(std::vector<PauliString> rows);

}  // namespace cc832

#endif
