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

#include "cc832/faults.hpp"

#include <atomic>
#include <thread>

#include "cc832/codes.hpp"
#include "cc832/runner.hpp"

namespace cc832 {

std::vector<FaultLocation> enumerate_locations(const Circuit& c) {
  std::vector<FaultLocation> locs;
  for (size_t k = 0; k < c.instructions.size(); k++) {
    const auto& in = c.instructions[k];
    if (in.is_two_qubit_gate()) {
      locs.push_back({int(k), FaultLocation::kTwoQubitGate, in.qubits, -1});
    } else if (in.op == Op::kMeasure) {
      locs.push_back({int(k), FaultLocation::kMeasurement, in.qubits, in.record});
    }
  }
  return locs;
}

std::vector<InjectedFault> fault_set(const Circuit& c, const FaultLocation& loc) {
  std::vector<InjectedFault> out;
  if (loc.kind == FaultLocation::kMeasurement) {
    InjectedFault f;
    f.index = loc.instr_index;
    f.flip_record = true;
    out.push_back(f);
    return out;
  }
  uint32_t a = loc.support[0], b = loc.support[1];
  for (int la = 0; la < 4; la++) {
    for (int lb = 0; lb < 4; lb++) {
      if (la == 0 && lb == 0) continue;
      InjectedFault f;
      f.index = loc.instr_index;
      f.pauli = PauliString(c.n_qubits);
      f.pauli.set_letter(a, "IXZY"[la]);
      f.pauli.set_letter(b, "IXZY"[lb]);
      out.push_back(f);
    }
  }
  return out;
}

namespace {

constexpr double kProbEps = 1e-9;

FaultOutcome summarize_readout(const Circuit& c, double accept_prob,
                               const std::vector<const std::vector<int>*>& accepted_records,
                               const std::vector<double>& accepted_probs) {
  FaultOutcome out;
  out.accept_probability = accept_prob;
  double err_prob = 0.0;
  for (size_t i = 0; i < accepted_records.size(); i++) {
    ReadoutValue v = c.eval_readout(*accepted_records[i]);
    if (arithmetic_error(v.a, v.s())) {
      err_prob += accepted_probs[i];
      if (out.witness_records.empty()) out.witness_records = *accepted_records[i];
    }
  }
  if (accept_prob < kProbEps) {
    out.classification = FaultClass::kAlwaysDetected;
  } else if (err_prob > 0.0) {
    out.classification = FaultClass::kMalicious;
    out.error_probability_given_accept = err_prob / accept_prob;
  } else {
    out.classification = FaultClass::kBenign;
  }
  return out;
}

}  // namespace

FaultOutcome classify_readout_faults(const Circuit& c, const std::vector<InjectedFault>& faults) {
  BranchOptions opts;
  opts.drop_rejected = true;
  std::vector<const std::vector<int>*> recs;
  std::vector<double> probs;
  double accept = 0.0;
  if (c.is_clifford()) {
    auto set = enumerate_branches_tab(c, faults, opts);
    for (const auto& b : set.branches) {
      if (!b.accepted) continue;
      accept += b.probability;
      recs.push_back(&b.records);
      probs.push_back(b.probability);
    }
    return summarize_readout(c, accept, recs, probs);
  }
  auto set = enumerate_branches_sv(c, faults, opts);
  for (const auto& b : set.branches) {
    if (!b.accepted) continue;
    accept += b.probability;
    recs.push_back(&b.records);
    probs.push_back(b.probability);
  }
  return summarize_readout(c, accept, recs, probs);
}

AuditReport audit_single_faults(const Circuit& c) {
  AuditReport rep;
  for (const auto& loc : enumerate_locations(c)) {
    for (const auto& f : fault_set(c, loc)) {
      FaultOutcome o = classify_readout_faults(c, {f});
      rep.total_faults++;
      switch (o.classification) {
        case FaultClass::kBenign: rep.benign++; break;
        case FaultClass::kAlwaysDetected: rep.always_detected++; break;
        case FaultClass::kMalicious:
          rep.malicious++;
          rep.malicious_entries.push_back({loc, f, o});
          break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// State and channel audits (tableau engine).

namespace {

// True when E (on the reference's qubits; block qubits listed in
// `block_positions`) is harmless for a distance-2 error-detecting block: a
// weight<=1 deviation modulo the reference stabilizer group, or an error a
// later syndrome measurement would flag (anticommutes with a code
// stabilizer in `detector_checks`).
bool deviation_benign(const StabilizerState& ref, const PauliString& e,
                      const std::vector<uint32_t>& block_positions,
                      const std::vector<PauliString>& detector_checks) {
  PauliString probe = e;
  probe.clear_phase();
  if (ref.group_value(probe)) return true;
  for (const auto& s : detector_checks)
    if (!probe.commutes_with(s)) return true;
  for (uint32_t q : block_positions) {
    for (char l : {'X', 'Y', 'Z'}) {
      PauliString p = pauli_mul(probe, PauliString::single(e.n, l, q));
      p.clear_phase();
      if (ref.group_value(p)) return true;
    }
  }
  return false;
}

struct SubsetChecker {
  std::vector<uint32_t> subset;        // qubits of the full circuit to keep
  StabilizerState ref{0};              // reference state on the subset
  std::vector<uint32_t> block_positions;
  std::vector<PauliString> detector_checks;  // code stabilizers, subset-relabeled

  // Returns true if the branch state restricts to a pure state on `subset`
  // deviating from ref by a benign Pauli; `why` explains failures.
  bool branch_ok(const StabilizerState& st, std::string* why) const {
    auto gens = st.restricted_generators(subset);
    if (!gens) {
      if (why) *why = "output entangled with measured-out qubits";
      return false;
    }
    StabilizerState sub = StabilizerState::from_generators(uint32_t(subset.size()), *gens);
    auto e = sub.pauli_from(ref);
    if (!e) {
      if (why) *why = "output not Pauli-related to the reference";
      return false;
    }
    if (!deviation_benign(ref, *e, block_positions, detector_checks)) {
      if (why) *why = "logical deviation " + e->str();
      return false;
    }
    return true;
  }

  bool branch_exact(const StabilizerState& st, std::string* why) const {
    auto gens = st.restricted_generators(subset);
    if (!gens) {
      if (why) *why = "output entangled with measured-out qubits";
      return false;
    }
    StabilizerState sub = StabilizerState::from_generators(uint32_t(subset.size()), *gens);
    if (sub.canonical_key() != ref.canonical_key()) {
      auto e = sub.pauli_from(ref);
      if (why) *why = "output differs from reference" + (e ? " by " + e->str() : "");
      return false;
    }
    return true;
  }
};

AuditReport audit_with_checker(const Circuit& c, const SubsetChecker& chk) {
  AuditReport rep;
  BranchOptions opts;
  opts.drop_rejected = true;
  for (const auto& loc : enumerate_locations(c)) {
    for (const auto& f : fault_set(c, loc)) {
      auto set = enumerate_branches_tab(c, {f}, opts);
      FaultOutcome o;
      double bad = 0.0;
      for (const auto& b : set.branches) {
        if (!b.accepted) continue;
        o.accept_probability += b.probability;
        std::string why;
        if (!chk.branch_ok(b.state, &why)) {
          bad += b.probability;
          if (o.witness_records.empty()) o.witness_records = b.records;
        }
      }
      if (o.accept_probability < kProbEps) {
        o.classification = FaultClass::kAlwaysDetected;
      } else if (bad > 0.0) {
        o.classification = FaultClass::kMalicious;
        o.error_probability_given_accept = bad / o.accept_probability;
      } else {
        o.classification = FaultClass::kBenign;
      }
      rep.total_faults++;
      switch (o.classification) {
        case FaultClass::kBenign: rep.benign++; break;
        case FaultClass::kAlwaysDetected: rep.always_detected++; break;
        case FaultClass::kMalicious:
          rep.malicious++;
          rep.malicious_entries.push_back({loc, f, o});
          break;
      }
    }
  }
  return rep;
}

}  // namespace

AuditReport audit_single_faults_state(const Circuit& c, const std::vector<uint32_t>& data_qubits,
                                      const std::vector<PauliString>& target_generators) {
  SubsetChecker chk;
  chk.subset = data_qubits;
  chk.ref = StabilizerState::from_generators(uint32_t(data_qubits.size()), target_generators);
  for (uint32_t i = 0; i < data_qubits.size(); i++) chk.block_positions.push_back(i);
  CodeSpec cube = code_832();
  if (data_qubits.size() == 8) {
    for (const auto& s : cube.stabilizers) chk.detector_checks.push_back(s);
  }
  return audit_with_checker(c, chk);
}

// ---------------------------------------------------------------------------
// Channel verification via reference qubits.

namespace {

// Appends three reference qubits and prepends a logical-Bell preparation:
// encode |000>_L (a GHZ over the block), then couple each reference to the
// support of the matching logical X.
Circuit choi_extended(const Circuit& c) {
  CodeSpec cube = code_832();
  uint32_t n = c.n_qubits + 3;
  Circuit ext(n);
  ext.name = c.name + "_choi";
  ext.h(0);
  for (uint32_t q = 1; q < 8; q++) ext.cx(0, q);
  for (uint32_t i = 0; i < 3; i++) {
    uint32_t ref = c.n_qubits + i;
    ext.h(ref);
    for (uint32_t q = 0; q < 8; q++)
      if (cube.logical_x[i].x_bit(q)) ext.cx(ref, q);
  }
  for (const auto& in : c.instructions) {
    Instruction copy = in;
    if (copy.op == Op::kPermute) {
      copy.perm.resize(n);
      for (uint32_t q = c.n_qubits; q < n; q++) copy.perm[q] = q;
    }
    if (copy.op == Op::kCondPauli) copy.pauli = PauliString(n, copy.pauli.x, copy.pauli.z, copy.pauli.neg());
    ext.instructions.push_back(std::move(copy));
  }
  ext.postselect = c.postselect;
  return ext;
}

size_t choi_prefix_length(const Circuit& c) {
  CodeSpec cube = code_832();
  size_t len = 8;  // H + 7 CX
  for (uint32_t i = 0; i < 3; i++) len += 1 + cube.logical_x[i].weight();
  return len;
}

SubsetChecker channel_checker(const Circuit& c, const ChannelSpec& spec) {
  CodeSpec cube = code_832();
  SubsetChecker chk;
  for (uint32_t q = 0; q < 8; q++) chk.subset.push_back(q);
  for (uint32_t i = 0; i < 3; i++) chk.subset.push_back(c.n_qubits + i);
  // Reference state on 11 qubits: code stabilizers plus the logical Bell
  // pairings, Hadamard-twisted where requested.
  std::vector<PauliString> gens;
  for (const auto& s : cube.stabilizers) gens.push_back(PauliString(11, s.x, s.z, s.neg()));
  for (uint32_t i = 0; i < 3; i++) {
    PauliString lx = cube.logical_x[i], lz = cube.logical_z[i];
    PauliString xr = PauliString::single(11, 'X', 8 + i);
    PauliString zr = PauliString::single(11, 'Z', 8 + i);
    PauliString bx = spec.hadamard[i] ? PauliString(11, lz.x, lz.z, false)
                                      : PauliString(11, lx.x, lx.z, false);
    PauliString bz = spec.hadamard[i] ? PauliString(11, lx.x, lx.z, false)
                                      : PauliString(11, lz.x, lz.z, false);
    gens.push_back(pauli_mul(bx, xr));
    gens.push_back(pauli_mul(bz, zr));
  }
  chk.ref = StabilizerState::from_generators(11, gens);
  for (uint32_t i = 0; i < 8; i++) chk.block_positions.push_back(i);
  for (const auto& s : cube.stabilizers)
    chk.detector_checks.push_back(PauliString(11, s.x, s.z, false));
  return chk;
}

}  // namespace

ChannelCheck verify_channel(const Circuit& c, const ChannelSpec& spec) {
  Circuit ext = choi_extended(c);
  SubsetChecker chk = channel_checker(c, spec);
  BranchOptions opts;
  opts.drop_rejected = true;
  auto set = enumerate_branches_tab(ext, {}, opts);
  ChannelCheck res;
  res.ok = true;
  for (const auto& b : set.branches) {
    if (!b.accepted) continue;
    res.accepted_branches++;
    res.accepted_probability += b.probability;
    std::string why;
    if (!chk.branch_exact(b.state, &why)) {
      res.ok = false;
      if (res.message.empty()) res.message = why;
    }
  }
  if (res.accepted_branches == 0) {
    res.ok = false;
    res.message = "no accepted branches";
  }
  return res;
}

AuditReport audit_single_faults_channel(const Circuit& c, const ChannelSpec& spec) {
  Circuit ext = choi_extended(c);
  size_t shift = choi_prefix_length(c);
  SubsetChecker chk = channel_checker(c, spec);
  // Locations come from the original circuit; shift indices into the
  // extension (the reference preparation is noiseless by construction).
  AuditReport rep;
  BranchOptions opts;
  opts.drop_rejected = true;
  for (const auto& loc : enumerate_locations(c)) {
    for (auto f : fault_set(c, loc)) {
      f.index += int(shift);
      if (f.pauli.n != 0) f.pauli = PauliString(ext.n_qubits, f.pauli.x, f.pauli.z, f.pauli.neg());
      auto set = enumerate_branches_tab(ext, {f}, opts);
      FaultOutcome o;
      double bad = 0.0;
      for (const auto& b : set.branches) {
        if (!b.accepted) continue;
        o.accept_probability += b.probability;
        std::string why;
        if (!chk.branch_ok(b.state, &why)) {
          bad += b.probability;
          if (o.witness_records.empty()) o.witness_records = b.records;
        }
      }
      if (o.accept_probability < kProbEps) {
        o.classification = FaultClass::kAlwaysDetected;
      } else if (bad > 0.0) {
        o.classification = FaultClass::kMalicious;
        o.error_probability_given_accept = bad / o.accept_probability;
      } else {
        o.classification = FaultClass::kBenign;
      }
      rep.total_faults++;
      switch (o.classification) {
        case FaultClass::kBenign: rep.benign++; break;
        case FaultClass::kAlwaysDetected: rep.always_detected++; break;
        case FaultClass::kMalicious:
          rep.malicious++;
          rep.malicious_entries.push_back({loc, f, o});
          break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Malicious pair counting.

PairCountReport count_malicious_pairs(const Circuit& c, int threads, size_t sample_cap) {
  auto locs = enumerate_locations(c);
  std::vector<std::vector<InjectedFault>> sets;
  sets.reserve(locs.size());
  for (const auto& loc : locs) sets.push_back(fault_set(c, loc));

  // Flatten location pairs for chunking.
  std::vector<std::pair<int, int>> loc_pairs;
  for (size_t i = 0; i < locs.size(); i++)
    for (size_t j = i + 1; j < locs.size(); j++) loc_pairs.push_back({int(i), int(j)});

  struct ChunkResult {
    long long pairs = 0;
    long long malicious = 0;
    std::vector<MaliciousPair> samples;
  };
  int n_threads = std::max(1, threads);
  size_t n_chunks = std::max<size_t>(1, std::min<size_t>(loc_pairs.size(), size_t(n_threads) * 8));
  std::vector<ChunkResult> results(n_chunks);

  auto run_chunk = [&](size_t chunk) {
    size_t begin = loc_pairs.size() * chunk / n_chunks;
    size_t end = loc_pairs.size() * (chunk + 1) / n_chunks;
    ChunkResult& out = results[chunk];
    for (size_t p = begin; p < end; p++) {
      auto [i, j] = loc_pairs[p];
      for (const auto& fa : sets[size_t(i)]) {
        for (const auto& fb : sets[size_t(j)]) {
          out.pairs++;
          FaultOutcome o = classify_readout_faults(c, {fa, fb});
          if (o.classification == FaultClass::kMalicious) {
            out.malicious++;
            if (out.samples.size() < sample_cap)
              out.samples.push_back({locs[size_t(i)], locs[size_t(j)], fa, fb, o.witness_records});
          }
        }
      }
    }
  };

  if (n_threads <= 1) {
    for (size_t chunk = 0; chunk < n_chunks; chunk++) run_chunk(chunk);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < n_threads; t++) {
      pool.emplace_back([&] {
        for (;;) {
          size_t chunk = next.fetch_add(1);
          if (chunk >= n_chunks) return;
          run_chunk(chunk);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  PairCountReport rep;
  rep.convention =
      "locations: two-qubit gates and measurements; Pauli faults inserted after gates "
      "(15 two-qubit Paulis), measurement faults as record flips; single-qubit gates, "
      "relabelings and classically controlled Paulis excluded; malicious = some accepted "
      "branch (probability > 1e-12) reads out an arithmetic error";
  for (const auto& r : results) {
    rep.pairs_total += r.pairs;
    rep.malicious += r.malicious;
    for (const auto& s : r.samples)
      if (rep.samples.size() < sample_cap) rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace cc832
