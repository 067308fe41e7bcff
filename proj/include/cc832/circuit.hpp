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

#ifndef CC832_CIRCUIT_HPP
#define CC832_CIRCUIT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cc832/pauli.hpp"

namespace cc832 {

enum class Op { kGate, kMeasure, kReset, kPermute, kCondPauli };

struct Instruction {
  Op op = Op::kGate;
  std::string gate;               // kGate: one of H,S,SDG,T,TDG,X,Y,Z,CX,CZ,CCZ,SWAP
  std::vector<uint32_t> qubits;   // kGate operands; kMeasure/kReset: single qubit
  char basis = 'Z';               // kMeasure: 'Z' or 'X'
  int record = -1;                // kMeasure: dense record id
  std::vector<uint32_t> perm;     // kPermute: letter at q moves to perm[q]
  std::vector<int> cond_records;  // kCondPauli: applied when parity of records is odd
  PauliString pauli;              // kCondPauli operator

  bool is_two_qubit_gate() const {
    return op == Op::kGate && (gate == "CX" || gate == "CZ" || gate == "SWAP");
  }
  bool is_single_qubit_gate() const { return op == Op::kGate && qubits.size() == 1; }
};

// Post-selection rule: keep the shot iff the parity of the listed records
// equals `parity` (all rules in this toolkit use parity 0).
struct Postselect {
  std::vector<int> records;
  int parity = 0;
  std::string label;
};

// Classical readout plan: a, s0, s1 are parities of measurement records;
// the sum register reads s = s0 + 2*s1.
struct ReadoutSpec {
  bool defined = false;
  std::vector<int> a, s0, s1;
};

struct ReadoutValue {
  int a = 0, s0 = 0, s1 = 0;
  int s() const { return s0 + 2 * s1; }
  int outcome_bits() const { return (a << 2) | (s0 << 1) | s1; }  // string "a s0 s1"
};

struct Circuit {
  std::string name;
  uint32_t n_qubits = 0;
  std::vector<Instruction> instructions;
  std::vector<Postselect> postselect;
  ReadoutSpec readout;
  // Index of the first destructive-readout instruction (fidelity probes
  // capture the state just before it); -1 when not meaningful.
  int pre_readout_cut = -1;
  std::vector<std::string> qubit_roles;  // "data" / "ancilla" / "flag" per qubit

  explicit Circuit(uint32_t n = 0) : n_qubits(n) {}

  // -- construction helpers ------------------------------------------------
  void gate(const std::string& name, std::vector<uint32_t> qs);
  void h(uint32_t q) { gate("H", {q}); }
  void s(uint32_t q) { gate("S", {q}); }
  void sdg(uint32_t q) { gate("SDG", {q}); }
  void t(uint32_t q) { gate("T", {q}); }
  void tdg(uint32_t q) { gate("TDG", {q}); }
  void x(uint32_t q) { gate("X", {q}); }
  void y(uint32_t q) { gate("Y", {q}); }
  void z(uint32_t q) { gate("Z", {q}); }
  void cx(uint32_t c, uint32_t t) { gate("CX", {c, t}); }
  void cz(uint32_t a, uint32_t b) { gate("CZ", {a, b}); }
  void swap(uint32_t a, uint32_t b) { gate("SWAP", {a, b}); }
  void ccz(uint32_t a, uint32_t b, uint32_t c) { gate("CCZ", {a, b, c}); }
  int measure(uint32_t q, char basis);
  void reset(uint32_t q);
  void permute(std::vector<uint32_t> perm);
  void cond_pauli(std::vector<int> records, PauliString p);
  void post_select(std::vector<int> records, const std::string& label);

  // -- derived quantities ---------------------------------------------------
  int num_records() const {
    int m = 0;
    for (const auto& in : instructions)
      if (in.op == Op::kMeasure) m = std::max(m, in.record + 1);
    return m;
  }
  int two_qubit_gate_count() const;
  int measurement_count() const;
  bool is_clifford() const;

  // Checks record density/uniqueness, qubit ranges and predicate references;
  // throws std::invalid_argument on violation.
  void validate() const;

  bool operator==(const Circuit& o) const;

  ReadoutValue eval_readout(const std::vector<int>& records) const;
  bool accepted(const std::vector<int>& records) const;
};

// JSON document (versioned schema).
std::string serialize(const Circuit& c);
Circuit deserialize(const std::string& text);

// Human-readable gate list; `permute` renders as relabeling comments (with
// an optional SWAP realization), T layers as named single-qubit gates.
std::string export_qasm_like(const Circuit& c, bool permute_as_swaps = false);

inline int parity_of(const std::vector<int>& records, const std::vector<int>& values) {
  int p = 0;
  for (int r : records) p ^= values[size_t(r)];
  return p;
}

}  // namespace cc832

#endif
