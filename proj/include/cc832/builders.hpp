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

#ifndef CC832_BUILDERS_HPP
#define CC832_BUILDERS_HPP

#include <map>
#include <string>

#include "cc832/circuit.hpp"
#include "cc832/codes.hpp"

namespace cc832 {

// Builders for every circuit in the registry.  Data qubits are always 0..7
// (block order of code_832) resp. 8..11 for the square-code block; ancillas
// follow.  Measurement bases are explicit instructions (no counted gates).

// Three bare qubits, the compiled adder: five CNOTs, three measurements.
Circuit build_nonft_adder();

// Minimal two-qubit-gate preparation of the triple |+> logical state
// (10 CNOTs, no measurements); regression-checked against min_cnot_prep.
Circuit build_nonft_preparation();

// Goto-style preparation: the minimal circuit above followed by an
// interleaved flag measurement of one weight-4 X and one weight-4 Z check
// sharing support; 18 CNOTs and 2 measurements in total.
Circuit build_ft_preparation();

// The full fault-tolerant adder: 24 CNOTs, 12 measurements.
Circuit build_ft_adder();

// Square-lattice variant: identical logical semantics, relabeled transport
// replaced by SWAP decompositions and two data relocations; 34 CNOTs.
Circuit build_planar_ft_adder();

// Teleportation-based logical Hadamard circuits (appendix constructions).
Circuit build_hadamard_double();
Circuit build_hadamard_single();

struct BuiltCircuit {
  Circuit circuit;
  int declared_two_qubit_gates = 0;
  int declared_measurements = 0;
  std::string description;
};

// Stable registry: names are a regression surface.
const std::map<std::string, BuiltCircuit>& named_circuits();
Circuit circuit_by_name(const std::string& name);

// Cost of the generic two-round Z-stabilizer measurement preparation the
// Goto construction replaces: (two-qubit gates, measurements).
std::pair<int, int> generic_prep_baseline_counts();

// Frozen constants derived by search and verified by regression tests.
// T-layer sign pattern: T on these qubits, TDG on the complement.
const std::vector<uint32_t>& ccz_t_positions();
// Supports of the interleaved X/Z verification pair in the preparation, in
// coupling order (X check first, Z check second).
const std::vector<uint32_t>& prep_check_x_order();
const std::vector<uint32_t>& prep_check_z_order();

// Square-lattice layout metadata for the planar build.
struct PlanarLayout {
  // site -> (row, col); the planar circuit's qubit indices are sites.
  std::vector<std::pair<int, int>> coords;
  bool adjacent(uint32_t a, uint32_t b) const {
    auto [ra, ca] = coords[a];
    auto [rb, cb] = coords[b];
    return std::abs(ra - rb) + std::abs(ca - cb) == 1;
  }
};
const PlanarLayout& planar_layout();

// Verifies every two-qubit gate of the planar circuit acts on lattice
// neighbours (permutations relabel sites for subsequent gates).  Returns an
// empty string on success, else a description of the first violation.
std::string planar_adjacency_violation(const Circuit& c, const PlanarLayout& layout);

}  // namespace cc832

#endif
