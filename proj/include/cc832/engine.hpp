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

#ifndef CC832_ENGINE_HPP
#define CC832_ENGINE_HPP

#include <vector>

#include "cc832/circuit.hpp"
#include "cc832/errors.hpp"
#include "cc832/statevec.hpp"
#include "cc832/tableau.hpp"

namespace cc832 {

// A Pauli inserted right after instruction `index`, or (for a measurement
// instruction) a classical flip of its record.
struct InjectedFault {
  int index = -1;
  PauliString pauli;
  bool flip_record = false;
};

struct BranchOptions {
  double prune_threshold = 1e-12;
  size_t branch_cap = size_t(1) << 14;
  // Abandon a branch as soon as a fully-recorded post-selection rule fails;
  // its probability is accumulated in rejected_probability instead.
  bool drop_rejected = false;
};

struct SvBranch {
  std::vector<int> records;
  double probability = 0.0;
  bool accepted = false;
  StateVector state;
};

struct SvBranchSet {
  std::vector<SvBranch> branches;
  double rejected_probability = 0.0;  // mass of branches dropped early
  double accepted_probability() const {
    double p = 0.0;
    for (const auto& b : branches) p += b.accepted ? b.probability : 0.0;
    return p;
  }
};

// Exhaustive expansion of every nondeterministic measurement (both outcomes),
// exact branch probabilities, pruning below `prune_threshold`.  Throws
// ResourceError beyond `branch_cap` branches.
SvBranchSet enumerate_branches_sv(const Circuit& c, const std::vector<InjectedFault>& faults = {},
                                  const BranchOptions& opts = {});

struct TabBranch {
  std::vector<int> records;
  double probability = 0.0;
  bool accepted = false;
  StabilizerState state;
};

struct TabBranchSet {
  std::vector<TabBranch> branches;
  double rejected_probability = 0.0;
  double accepted_probability() const {
    double p = 0.0;
    for (const auto& b : branches) p += b.accepted ? b.probability : 0.0;
    return p;
  }
};

// Same expansion on the tableau engine; the circuit must be Clifford.
TabBranchSet enumerate_branches_tab(const Circuit& c, const std::vector<InjectedFault>& faults = {},
                                    const BranchOptions& opts = {});

// Conjugates `fault` from just after instruction `from_index` to the end of
// the circuit.  Clifford gates only; measurements and resets that touch the
// fault's support, and non-Clifford gates, raise PropagationUnsupported.
PauliString propagate_pauli(const Circuit& c, const PauliString& fault, int from_index);

// Conjugation of a Pauli by one instruction (exposed for tests and the
// detectable-error analysis).
void conjugate_pauli_through(PauliString& p, const Instruction& in);

}  // namespace cc832

#endif
