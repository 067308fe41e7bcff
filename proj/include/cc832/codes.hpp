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

#ifndef CC832_CODES_HPP
#define CC832_CODES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cc832/errors.hpp"
#include "cc832/pauli.hpp"
#include "cc832/tableau.hpp"

namespace cc832 {

// Qubit indexing convention: physical qubits are numbered 0..7 in the column
// order of the standard stabilizer table for the cube code; qubit q sits at
// cube vertex (x, y, z) with q = 4x + 2y + z.  Faces are derived from the
// weight-4 Z stabilizer supports (and their complements), not from a drawing.
struct CodeSpec {
  std::string name;
  uint32_t n = 0, k = 0, d = 0;
  std::vector<PauliString> stabilizers;
  std::vector<PauliString> logical_x, logical_z;  // k each, index-aligned pairs

  struct Face {
    std::string name;
    std::array<uint32_t, 4> qubits;
  };
  std::vector<Face> faces;
  std::map<std::string, std::vector<uint32_t>> symmetries;

  // Commutation relations, rank, and (for n <= 12) code distance by
  // exhaustive enumeration of all Paulis up to weight d.
  void check() const;

  // True iff p is a product of stabilizer generators, ignoring sign.
  bool in_stabilizer_group(const PauliString& p) const;

  // |0...0> logical basis state (stabilizers + logical Z's) and |+...+>
  // (stabilizers + logical X's), used for presentation-independent
  // comparisons of code specs.
  StabilizerState zero_state() const;
  StabilizerState plus_state() const;

  std::string to_json() const;
};

CodeSpec code_832();
CodeSpec code_422();

// Action of a stabilizer-group-preserving qubit permutation on the logical
// algebra.  Each image is decomposed over logical generators (mod the
// stabilizer group).
struct LogicalMap {
  struct Entry {
    PauliString image;
    std::vector<uint32_t> x_factors;  // which logical X's multiply into the image
    std::vector<uint32_t> z_factors;
  };
  std::vector<Entry> x_images, z_images;  // indexed by logical qubit

  bool is_identity() const;
};

// Throws NotASymmetryError if perm does not fix the stabilizer group setwise.
LogicalMap permutation_action(const CodeSpec& code, const std::vector<uint32_t>& perm);

// Destructive X-basis measurement of one face of the cube code.
struct DestructiveMeasurement {
  uint32_t measured_logical = 0;          // index of the X logical that becomes classical
  std::vector<uint32_t> face;             // qubits measured in the X basis
  std::vector<uint32_t> opposite;         // support of the residual block
  CodeSpec residual;                      // the residual code, relabeled to 0..3
  // Representatives of the surviving logicals on the residual block
  // (original 8-qubit indexing, support inside `opposite`).
  std::vector<uint32_t> surviving_logicals;
  std::vector<PauliString> residual_x, residual_z;
  // Classical sign of each surviving X logical: parity of the X results on
  // these face qubits (same order as surviving_logicals).
  std::vector<std::vector<uint32_t>> x_sign_sources;
  // Stabilizer reconstruction: the X^(x)8 eigenvalue is the parity of the
  // four face results and one flag-measured X^(x)4 on `opposite`.
  std::vector<uint32_t> s_x_face_part;
  std::vector<uint32_t> s_x_opposite_part;
};

DestructiveMeasurement destructive_face_measurement(const CodeSpec& code832,
                                                    const std::string& face_name);

// Transversal CNOT layer between a face of the cube code (block qubits 0..7,
// acting as controls) and the four qubits of the [[4,2,2]] code (8..11,
// targets).  pairing[i] is the 422-local qubit matched with face qubit i
// (face listed in ascending order).  Returns the induced map on the joint
// 5-qubit logical algebra (entries 0..2: cube block, 3..4: 422 block).
LogicalMap transversal_cnot_832_422(const std::string& face_name,
                                    const std::vector<uint32_t>& pairing = {0, 1, 2, 3});

// The joint [[8,3,2]] (x) [[4,2,2]] code on 12 qubits (block ordering above).
CodeSpec joint_code_832_422();

}  // namespace cc832

#endif
