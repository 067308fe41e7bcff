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

#ifndef CC832_STATEVEC_HPP
#define CC832_STATEVEC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cc832/pauli.hpp"
#include "cc832/rng.hpp"

namespace cc832 {

// Dense state vector for the small non-Clifford circuits (the transversal
// CCZ's T layer is not expressible in the tableau engine).  Hard capped at
// 16 qubits.  Value type; cloning at measurement forks is the intended use.
class StateVector {
 public:
  static constexpr uint32_t kMaxQubits = 16;

  explicit StateVector(uint32_t n_qubits);

  uint32_t num_qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& amp(size_t i) { return amps_[i]; }

  void apply_h(uint32_t q);
  void apply_s(uint32_t q) { phase_one(q, {0.0, 1.0}); }
  void apply_sdg(uint32_t q) { phase_one(q, {0.0, -1.0}); }
  void apply_t(uint32_t q) { phase_one(q, {M_SQRT1_2, M_SQRT1_2}); }
  void apply_tdg(uint32_t q) { phase_one(q, {M_SQRT1_2, -M_SQRT1_2}); }
  void apply_x(uint32_t q);
  void apply_y(uint32_t q);
  void apply_z(uint32_t q) { phase_one(q, {-1.0, 0.0}); }
  void apply_cx(uint32_t c, uint32_t t);
  void apply_cz(uint32_t a, uint32_t b);
  void apply_ccz(uint32_t a, uint32_t b, uint32_t c);
  void apply_swap(uint32_t a, uint32_t b);
  void apply_permutation(const std::vector<uint32_t>& perm);
  void apply_pauli(const PauliString& p);

  // Named-gate dispatch for {H,S,SDG,T,TDG,X,Y,Z,CX,CZ,CCZ,SWAP}.
  void apply_gate(const std::string& name, const std::vector<uint32_t>& qubits);

  // Probability that measuring qubit q in `basis` ('Z' or 'X') yields 1.
  double prob_one(uint32_t q, char basis);

  // Born-rule measurement; `forced` overrides sampling (used by branch
  // enumeration).  Returns the outcome bit.  Collapses and renormalizes.
  int measure_qubit(uint32_t q, char basis, std::optional<int> forced, RngStream& rng);

  // Projects onto outcome without sampling; returns the branch probability.
  double collapse(uint32_t q, char basis, int outcome);

  void reset_qubit(uint32_t q, RngStream& rng);

  double norm_sq() const;
  void renormalize();

 private:
  void phase_one(uint32_t q, std::complex<double> phase);

  uint32_t n_;
  std::vector<std::complex<double>> amps_;
};

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace cc832

#endif
