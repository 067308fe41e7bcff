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

#ifndef CC832_SYNTH_HPP
#define CC832_SYNTH_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cc832/circuit.hpp"
#include "cc832/codes.hpp"
#include "cc832/engine.hpp"
#include "cc832/tableau.hpp"

namespace cc832 {

struct SynthOptions {
  size_t node_cap = 10'000'000;
  // Restrict CNOT moves to these ordered pairs (empty: all-to-all).
  std::vector<std::pair<uint32_t, uint32_t>> allowed_moves;
};

struct SynthResult {
  Circuit prep;                                     // runs from |0...0> to the target
  std::vector<std::pair<uint32_t, uint32_t>> moves; // backward search moves, in search order
  int endpoint_bell_pairs = 0;                      // 1 CNOT each in the init section
  int total_cnots = 0;                              // endpoint_bell_pairs + |moves|
};

using AcceptFn = std::function<bool(const StabilizerState&)>;

// True iff the state factorizes into single-qubit states and entangled
// two-qubit blocks ("Bell pairs" up to local Cliffords).
bool is_block_product(const StabilizerState& st);
// Number of entangled 2-qubit blocks of a block-product state.
int bell_pair_count(const StabilizerState& st);

// Breadth-first search backward from `target` using CNOT edges on canonical
// stabilizer states, until `accept`; returns a preparation circuit built
// from an exact init of the accepted endpoint followed by the reversed move
// sequence.  The returned CNOT total (endpoint Bell inits + moves) is
// minimal over this move set; ties break on lexicographically smallest
// (control, target) expanded first.  Throws ResourceError past the node cap
// and ExhaustionError when the reachable set is exhausted.
SynthResult min_cnot_prep(const StabilizerState& target, const AcceptFn& accept,
                          const SynthOptions& opts = {});

// Single-fault propagation audit of a Clifford preparation circuit.
struct ErrorAnalysisReport {
  enum Category { kTrivial = 0, kDetected = 1, kUndetectedLogical = 2 };
  struct FaultRecord {
    int instr_index;
    PauliString inserted;
    PauliString residual;   // at circuit end
    Category category;      // with all candidate checks active
  };
  std::vector<FaultRecord> faults;
  int trivial_count = 0;
  int detected_count = 0;
  int undetected_logical_count = 0;
  // Minimal candidate subsets (indices) with zero undetected-logical faults;
  // empty when even the full candidate set leaks.
  std::vector<std::vector<uint32_t>> minimal_sufficient_subsets;
};

// Classifies every single two-qubit-gate fault of `prep` after propagation
// to the end: (a) trivial (residual stabilizes `target_state`), (b) detected
// by a candidate check or by one of the code's stabilizers, (c) undetected
// and logical.  The minimal subsets are computed against the code
// stabilizers always being available at readout.
ErrorAnalysisReport detectable_error_analysis(const Circuit& prep,
                                              const std::vector<PauliString>& candidate_checks,
                                              const CodeSpec& code,
                                              const StabilizerState& target_state);

}  // namespace cc832

#endif
