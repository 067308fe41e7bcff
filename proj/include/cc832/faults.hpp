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

#ifndef CC832_FAULTS_HPP
#define CC832_FAULTS_HPP

#include <array>
#include <string>
#include <vector>

#include "cc832/circuit.hpp"
#include "cc832/engine.hpp"
#include "cc832/tableau.hpp"

namespace cc832 {

// Fault locations are the error-prone operations: two-qubit gates (Pauli
// noise after the gate) and measurements (classical record flips).
// Single-qubit gates, relabelings and classically controlled Paulis
// contribute none.
struct FaultLocation {
  int instr_index = -1;
  enum Kind { kTwoQubitGate, kMeasurement } kind = kTwoQubitGate;
  std::vector<uint32_t> support;
  int record = -1;
};

std::vector<FaultLocation> enumerate_locations(const Circuit& c);

// The fault operators of one location: the 15 non-identity two-qubit Paulis,
// or the single record flip.
std::vector<InjectedFault> fault_set(const Circuit& c, const FaultLocation& loc);

enum class FaultClass { kBenign, kAlwaysDetected, kMalicious };

struct FaultOutcome {
  FaultClass classification = FaultClass::kBenign;
  double accept_probability = 0.0;
  double error_probability_given_accept = 0.0;
  std::vector<int> witness_records;  // an accepted erroneous branch, when malicious
};

// Evaluates a set of injected faults on a readout circuit: malicious iff
// some accepted branch reads out an arithmetic error.
FaultOutcome classify_readout_faults(const Circuit& c, const std::vector<InjectedFault>& faults);

struct AuditEntry {
  FaultLocation location;
  InjectedFault fault;
  FaultOutcome outcome;
};

struct AuditReport {
  int total_faults = 0;
  int benign = 0;
  int always_detected = 0;
  int malicious = 0;
  std::vector<AuditEntry> malicious_entries;
};

// Exhaustive single-fault audit of a readout circuit.
AuditReport audit_single_faults(const Circuit& c);

// Exhaustive single-fault audit of a state-preparation circuit: an accepted
// branch is benign when its output deviates from the target (given as
// generators over `data_qubits`, relabeled) by at most a weight-1 Pauli
// modulo the target's stabilizer group.
AuditReport audit_single_faults_state(const Circuit& c, const std::vector<uint32_t>& data_qubits,
                                      const std::vector<PauliString>& target_generators);

// Expected logical action of a Clifford channel circuit on the cube code:
// per logical qubit, identity or Hadamard.
struct ChannelSpec {
  std::array<bool, 3> hadamard = {false, false, false};
};

struct ChannelCheck {
  bool ok = false;
  int accepted_branches = 0;
  double accepted_probability = 0.0;
  std::string message;
};

// Verifies (fault-free) that in every accepted branch, after the classical
// corrections, the circuit acts on the logical algebra exactly as `spec`
// says; checked with reference qubits (Choi form) on the tableau engine.
ChannelCheck verify_channel(const Circuit& c, const ChannelSpec& spec);

// Exhaustive single-fault audit of a Clifford channel circuit: an accepted
// branch is benign when the output Choi state deviates from the expected one
// by at most a weight-1 Pauli on the block, modulo the expected state's
// stabilizer group.
AuditReport audit_single_faults_channel(const Circuit& c, const ChannelSpec& spec);

struct MaliciousPair {
  FaultLocation loc_a, loc_b;
  InjectedFault fault_a, fault_b;
  std::vector<int> witness_records;
};

struct PairCountReport {
  long long pairs_total = 0;
  long long malicious = 0;
  std::vector<MaliciousPair> samples;  // the first few in enumeration order
  std::string convention;              // fault-model manifest
};

// Exhaustively counts unordered pairs of single faults from distinct
// locations that admit an accepted branch with an arithmetic error.
// Deterministic and independent of the worker count.
PairCountReport count_malicious_pairs(const Circuit& c, int threads = 1, size_t sample_cap = 8);

}  // namespace cc832

#endif
