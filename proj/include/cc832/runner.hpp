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

#ifndef CC832_RUNNER_HPP
#define CC832_RUNNER_HPP

#include <array>
#include <cstdint>
#include <string>

#include "cc832/circuit.hpp"
#include "cc832/statevec.hpp"

namespace cc832 {

// True iff the pair (a, s) is not a valid one-bit sum a + b = s.
inline bool arithmetic_error(int a, int s) {
  return s == 3 || (s == 2 && a == 0) || (s == 0 && a == 1);
}

// Depolarizing circuit noise: p1 per single-qubit gate (uniform X/Y/Z), p2
// per two-qubit gate (uniform over the 15 non-identity pair Paulis), p_meas
// record flips, p_init preparation flips.  Relabelings and classically
// controlled Paulis are noiseless.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_meas = 0.0;
  double p_init = 0.0;

  // Entangling gates and measurements at the 2e-3 scale.
  static NoiseModel emulator_like() { return {0.0, 2e-3, 2e-3, 0.0}; }
  bool is_zero() const { return p1 == 0 && p2 == 0 && p_meas == 0 && p_init == 0; }
};

struct ShotResult {
  std::vector<int> records;
  bool accepted = false;
  int a = 0, s0 = 0, s1 = 0;
  int s() const { return s0 + 2 * s1; }
  int outcome_bits() const { return (a << 2) | (s0 << 1) | s1; }
};

struct RunReport {
  std::string circuit_name;
  uint64_t shots_total = 0;
  uint64_t shots_accepted = 0;
  std::array<uint64_t, 8> outcome_counts{};  // indexed by bits (a, s0, s1)
  uint64_t arithmetic_errors = 0;
  double arithmetic_error_rate = 0.0;  // over accepted shots
  double stderr_rate = 0.0;            // binomial
  double retention = 0.0;
  uint64_t seed = 0;
  NoiseModel noise;
  int threads = 1;
  double wall_seconds = 0.0;

  std::string to_json() const;
  std::string to_csv() const;
};

// One state-vector trajectory; deterministic for fixed (seed, shot_index).
// When `cut_capture` is non-null, the state just before the instruction at
// circuit.pre_readout_cut is copied into it.
ShotResult run_single_shot(const Circuit& c, const NoiseModel& noise, uint64_t seed,
                           uint64_t shot_index, StateVector* cut_capture = nullptr);

RunReport run_shots(const Circuit& c, const NoiseModel& noise, uint64_t n_shots, uint64_t seed,
                    int threads = 1);

// Mean fidelity of the pre-readout state against the ideal one, over
// trajectories that pass every post-selection rule of the full circuit.
double fidelity_probe(const Circuit& c, const NoiseModel& noise, uint64_t n_trajectories,
                      uint64_t seed, int threads = 1);

// patches * 2d^2 physical qubits.
long long surface_resource_estimate(int d, int patches);

}  // namespace cc832

#endif
