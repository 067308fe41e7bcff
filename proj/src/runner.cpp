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

#include "cc832/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "cc832/rng.hpp"

namespace cc832 {

namespace {

// Applies a uniformly random non-identity Pauli on `qs` (joint support).
void sample_depolarizing(StateVector& st, const std::vector<uint32_t>& qs, RngStream& rng) {
  uint32_t k = uint32_t(qs.size());
  uint64_t options = 1;
  for (uint32_t i = 0; i < k; i++) options *= 4;
  uint64_t pick = 1 + rng.next_below(options - 1);  // skip identity
  PauliString p(st.num_qubits());
  for (uint32_t i = 0; i < k; i++) {
    p.set_letter(qs[i], "IXZY"[pick & 3]);
    pick >>= 2;
  }
  st.apply_pauli(p);
}

}  // namespace

ShotResult run_single_shot(const Circuit& c, const NoiseModel& noise, uint64_t seed,
                           uint64_t shot_index, StateVector* cut_capture) {
  RngStream fault_rng(seed, 2 * shot_index);
  RngStream meas_rng(seed, 2 * shot_index + 1);
  StateVector st(c.n_qubits);
  ShotResult res;
  res.records.assign(size_t(c.num_records()), 0);
  for (size_t k = 0; k < c.instructions.size(); k++) {
    if (cut_capture && int(k) == c.pre_readout_cut) *cut_capture = st;
    const Instruction& in = c.instructions[k];
    switch (in.op) {
      case Op::kGate: {
        st.apply_gate(in.gate, in.qubits);
        double p = in.qubits.size() == 1 ? noise.p1 : noise.p2;
        if (p > 0.0 && fault_rng.next_double() < p) sample_depolarizing(st, in.qubits, fault_rng);
        break;
      }
      case Op::kMeasure: {
        int out = st.measure_qubit(in.qubits[0], in.basis, std::nullopt, meas_rng);
        if (noise.p_meas > 0.0 && fault_rng.next_double() < noise.p_meas) out ^= 1;
        res.records[size_t(in.record)] = out;
        break;
      }
      case Op::kReset: {
        st.reset_qubit(in.qubits[0], meas_rng);
        if (noise.p_init > 0.0 && fault_rng.next_double() < noise.p_init)
          st.apply_x(in.qubits[0]);
        break;
      }
      case Op::kPermute:
        st.apply_permutation(in.perm);
        break;
      case Op::kCondPauli:
        if (parity_of(in.cond_records, res.records)) st.apply_pauli(in.pauli);
        break;
    }
  }
  res.accepted = c.accepted(res.records);
  if (c.readout.defined) {
    ReadoutValue v = c.eval_readout(res.records);
    res.a = v.a;
    res.s0 = v.s0;
    res.s1 = v.s1;
  }
  return res;
}

RunReport run_shots(const Circuit& c, const NoiseModel& noise, uint64_t n_shots, uint64_t seed,
                    int threads) {
  if (n_shots < 1) throw std::invalid_argument("run_shots: need at least one shot");
  auto t0 = std::chrono::steady_clock::now();
  struct Tally {
    uint64_t accepted = 0;
    std::array<uint64_t, 8> outcomes{};
    uint64_t errors = 0;
  };
  int n_threads = std::max(1, threads);
  size_t n_chunks = std::max<size_t>(1, std::min<uint64_t>(n_shots, uint64_t(n_threads) * 16));
  std::vector<Tally> tallies(n_chunks);

  auto run_chunk = [&](size_t chunk) {
    uint64_t begin = n_shots * chunk / n_chunks;
    uint64_t end = n_shots * (chunk + 1) / n_chunks;
    Tally& t = tallies[chunk];
    for (uint64_t i = begin; i < end; i++) {
      ShotResult r = run_single_shot(c, noise, seed, i);
      if (!r.accepted) continue;
      t.accepted++;
      if (c.readout.defined) {
        t.outcomes[size_t(r.outcome_bits())]++;
        if (arithmetic_error(r.a, r.s())) t.errors++;
      }
    }
  };
  if (n_threads <= 1) {
    for (size_t chunk = 0; chunk < n_chunks; chunk++) run_chunk(chunk);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
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

  RunReport rep;
  rep.circuit_name = c.name;
  rep.shots_total = n_shots;
  rep.seed = seed;
  rep.noise = noise;
  rep.threads = n_threads;
  for (const auto& t : tallies) {
    rep.shots_accepted += t.accepted;
    rep.arithmetic_errors += t.errors;
    for (size_t i = 0; i < 8; i++) rep.outcome_counts[i] += t.outcomes[i];
  }
  rep.retention = double(rep.shots_accepted) / double(n_shots);
  if (rep.shots_accepted > 0) {
    double r = double(rep.arithmetic_errors) / double(rep.shots_accepted);
    rep.arithmetic_error_rate = r;
    rep.stderr_rate = std::sqrt(r * (1.0 - r) / double(rep.shots_accepted));
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

double fidelity_probe(const Circuit& c, const NoiseModel& noise, uint64_t n_trajectories,
                      uint64_t seed, int threads) {
  if (c.pre_readout_cut < 0)
    throw std::invalid_argument("fidelity_probe: circuit has no pre-readout cut point");
  StateVector ideal(c.n_qubits);
  run_single_shot(c, NoiseModel{}, seed, 0, &ideal);

  int n_threads = std::max(1, threads);
  size_t n_chunks = std::max<size_t>(1, std::min<uint64_t>(n_trajectories, uint64_t(n_threads) * 8));
  struct Acc {
    double sum = 0.0;
    uint64_t count = 0;
  };
  std::vector<Acc> accs(n_chunks);
  auto run_chunk = [&](size_t chunk) {
    uint64_t begin = n_trajectories * chunk / n_chunks;
    uint64_t end = n_trajectories * (chunk + 1) / n_chunks;
    StateVector cut(c.n_qubits);
    for (uint64_t i = begin; i < end; i++) {
      ShotResult r = run_single_shot(c, noise, seed, i, &cut);
      if (!r.accepted) continue;
      accs[chunk].sum += fidelity(cut, ideal);
      accs[chunk].count++;
    }
  };
  if (n_threads <= 1) {
    for (size_t chunk = 0; chunk < n_chunks; chunk++) run_chunk(chunk);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
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
  double sum = 0.0;
  uint64_t count = 0;
  for (const auto& a : accs) {
    sum += a.sum;
    count += a.count;
  }
  if (count == 0) throw std::runtime_error("fidelity_probe: no accepted trajectories");
  return sum / double(count);
}

long long surface_resource_estimate(int d, int patches) {
  if (d < 1 || patches < 1)
    throw std::invalid_argument("surface_resource_estimate: d and patches must be positive");
  return 2ll * patches * d * d;
}

std::string RunReport::to_json() const {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["circuit"] = circuit_name;
  doc["shots_total"] = shots_total;
  doc["shots_accepted"] = shots_accepted;
  doc["retention"] = retention;
  nlohmann::json freq;
  for (int bits = 0; bits < 8; bits++) {
    std::string key = {char('0' + ((bits >> 2) & 1)), char('0' + ((bits >> 1) & 1)),
                       char('0' + (bits & 1))};
    freq[key] = {{"count", outcome_counts[size_t(bits)]},
                 {"share_of_accepted",
                  shots_accepted ? double(outcome_counts[size_t(bits)]) / double(shots_accepted)
                                 : 0.0}};
  }
  doc["outcomes"] = std::move(freq);
  doc["arithmetic_errors"] = arithmetic_errors;
  doc["arithmetic_error_rate"] = arithmetic_error_rate;
  doc["stderr"] = stderr_rate;
  doc["seed"] = seed;
  doc["noise"] = {{"p1", noise.p1}, {"p2", noise.p2}, {"p_meas", noise.p_meas},
                  {"p_init", noise.p_init}};
  doc["threads"] = threads;
  doc["wall_seconds"] = wall_seconds;
  return doc.dump(2);
}

std::string RunReport::to_csv() const {
  std::string out = "outcome,count,share_of_accepted\n";
  for (int bits = 0; bits < 8; bits++) {
    std::string key = {char('0' + ((bits >> 2) & 1)), char('0' + ((bits >> 1) & 1)),
                       char('0' + (bits & 1))};
    double share =
        shots_accepted ? double(outcome_counts[size_t(bits)]) / double(shots_accepted) : 0.0;
    out += key + "," + std::to_string(outcome_counts[size_t(bits)]) + "," +
           std::to_string(share) + "\n";
  }
  out += "shots_total," + std::to_string(shots_total) + ",\n";
  out += "shots_accepted," + std::to_string(shots_accepted) + ",\n";
  out += "retention," + std::to_string(retention) + ",\n";
  out += "arithmetic_error_rate," + std::to_string(arithmetic_error_rate) + "," +
         std::to_string(stderr_rate) + "\n";
  return out;
}

}  // namespace cc832
