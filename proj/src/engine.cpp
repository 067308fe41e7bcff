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

#include "cc832/engine.hpp"

#include <algorithm>

namespace cc832 {

namespace {

// Post-selection rules become checkable once their last record is written.
struct PredicateSchedule {
  // ready[r] = indices of rules whose final record is r.
  std::vector<std::vector<int>> ready;

  PredicateSchedule(const Circuit& c) {
    ready.resize(size_t(std::max(1, c.num_records())));
    for (size_t i = 0; i < c.postselect.size(); i++) {
      int last = -1;
      for (int r : c.postselect[i].records) last = std::max(last, r);
      if (last >= 0) ready[size_t(last)].push_back(int(i));
    }
  }
};

std::vector<std::vector<const InjectedFault*>> index_faults(const Circuit& c,
                                                            const std::vector<InjectedFault>& fs) {
  std::vector<std::vector<const InjectedFault*>> by_index(c.instructions.size());
  for (const auto& f : fs) {
    if (f.index < 0 || size_t(f.index) >= c.instructions.size())
      throw std::invalid_argument("fault index out of range");
    by_index[size_t(f.index)].push_back(&f);
  }
  return by_index;
}

}  // namespace

SvBranchSet enumerate_branches_sv(const Circuit& c, const std::vector<InjectedFault>& faults,
                                  const BranchOptions& opts) {
  if (c.n_qubits > StateVector::kMaxQubits)
    throw std::invalid_argument("enumerate_branches_sv: too many qubits");
  auto by_index = index_faults(c, faults);
  PredicateSchedule sched(c);
  SvBranchSet out;
  size_t live = 0;

  struct Frame {
    StateVector state;
    std::vector<int> records;
    double prob;
    size_t next_instr;
    bool rejected;
  };
  std::vector<Frame> stack;
  stack.push_back({StateVector(c.n_qubits), std::vector<int>(size_t(c.num_records()), 0), 1.0, 0, false});

  RngStream unused_rng(0, 0);
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    bool pruned = false;
    for (size_t k = fr.next_instr; k < c.instructions.size() && !pruned; k++) {
      const Instruction& in = c.instructions[k];
      switch (in.op) {
        case Op::kGate:
          fr.state.apply_gate(in.gate, in.qubits);
          break;
        case Op::kPermute:
          fr.state.apply_permutation(in.perm);
          break;
        case Op::kCondPauli:
          if (parity_of(in.cond_records, fr.records)) fr.state.apply_pauli(in.pauli);
          break;
        case Op::kReset: {
          uint32_t q = in.qubits[0];
          double p1 = fr.state.prob_one(q, 'Z');
          if (p1 > 1.0 - 1e-9) {
            fr.state.collapse(q, 'Z', 1);
            fr.state.apply_x(q);
          } else if (p1 >= 1e-9) {
            // Entangled reset: branch like a measurement without a record.
            Frame other = fr;
            other.state.collapse(q, 'Z', 1);
            other.state.apply_x(q);
            other.prob *= p1;
            other.next_instr = k + 1;
            if (other.prob >= opts.prune_threshold) stack.push_back(std::move(other));
            fr.state.collapse(q, 'Z', 0);
            fr.prob *= 1.0 - p1;
            if (fr.prob < opts.prune_threshold) pruned = true;
          } else {
            fr.state.collapse(q, 'Z', 0);
          }
          break;
        }
        case Op::kMeasure: {
          uint32_t q = in.qubits[0];
          bool flip = false;
          for (const auto* f : by_index[k])
            if (f->flip_record) flip = !flip;
          double p1 = fr.state.prob_one(q, in.basis);
          int outcome;
          if (p1 > 1.0 - 1e-9) {
            outcome = 1;
            fr.state.collapse(q, in.basis, 1);
          } else if (p1 < 1e-9) {
            outcome = 0;
            fr.state.collapse(q, in.basis, 0);
          } else {
            // Fork: push outcome-1 continuation, keep outcome-0 here.
            Frame other = fr;
            other.state.collapse(q, in.basis, 1);
            other.prob *= p1;
            other.records[size_t(in.record)] = 1 ^ int(flip);
            other.next_instr = k;  // re-enter to run fault+predicate logic below
            // Finish the measurement bookkeeping for `other` inline instead.
            other.next_instr = k + 1;
            {
              // Pauli faults attached to this measurement act after collapse.
              for (const auto* f : by_index[k])
                if (!f->flip_record) other.state.apply_pauli(f->pauli);
              bool rej = false;
              for (int pi : sched.ready[size_t(in.record)]) {
                const auto& ps = c.postselect[size_t(pi)];
                if (parity_of(ps.records, other.records) != ps.parity) rej = true;
              }
              if (rej) {
                if (opts.drop_rejected) {
                  out.rejected_probability += other.prob;
                } else {
                  other.rejected = true;
                  if (other.prob >= opts.prune_threshold) stack.push_back(std::move(other));
                }
              } else if (other.prob >= opts.prune_threshold) {
                stack.push_back(std::move(other));
              }
            }
            outcome = 0;
            fr.state.collapse(q, in.basis, 0);
            fr.prob *= 1.0 - p1;
            if (fr.prob < opts.prune_threshold) {
              pruned = true;
              break;
            }
          }
          fr.records[size_t(in.record)] = outcome ^ int(flip);
          for (const auto* f : by_index[k])
            if (!f->flip_record) fr.state.apply_pauli(f->pauli);
          for (int pi : sched.ready[size_t(in.record)]) {
            const auto& ps = c.postselect[size_t(pi)];
            if (parity_of(ps.records, fr.records) != ps.parity) {
              if (opts.drop_rejected) {
                out.rejected_probability += fr.prob;
                pruned = true;
              } else {
                fr.rejected = true;
              }
            }
          }
          break;
        }
      }
      if (pruned) break;
      if (in.op != Op::kMeasure) {
        for (const auto* f : by_index[k]) {
          if (f->flip_record) throw std::invalid_argument("record flip on non-measurement");
          fr.state.apply_pauli(f->pauli);
        }
      }
      fr.next_instr = k + 1;
    }
    if (pruned) continue;
    if (fr.next_instr >= c.instructions.size()) {
      SvBranch b{std::move(fr.records), fr.prob, false, std::move(fr.state)};
      b.accepted = !fr.rejected && c.accepted(b.records);
      out.branches.push_back(std::move(b));
      if (++live > opts.branch_cap)
        throw ResourceError("enumerate_branches_sv: branch cap exceeded");
    }
  }
  return out;
}

TabBranchSet enumerate_branches_tab(const Circuit& c, const std::vector<InjectedFault>& faults,
                                    const BranchOptions& opts) {
  if (!c.is_clifford())
    throw PropagationUnsupported("enumerate_branches_tab: circuit contains non-Clifford gates");
  auto by_index = index_faults(c, faults);
  PredicateSchedule sched(c);
  TabBranchSet out;
  size_t live = 0;

  struct Frame {
    StabilizerState state;
    std::vector<int> records;
    double prob;
    size_t next_instr;
    bool rejected;
  };
  std::vector<Frame> stack;
  stack.push_back(
      {StabilizerState(c.n_qubits), std::vector<int>(size_t(c.num_records()), 0), 1.0, 0, false});
  RngStream rng(0, 0);

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    bool pruned = false;
    for (size_t k = fr.next_instr; k < c.instructions.size() && !pruned; k++) {
      const Instruction& in = c.instructions[k];
      switch (in.op) {
        case Op::kGate:
          fr.state.apply_gate(in.gate, in.qubits);
          break;
        case Op::kPermute:
          fr.state.apply_permutation(in.perm);
          break;
        case Op::kCondPauli:
          if (parity_of(in.cond_records, fr.records)) fr.state.apply_pauli(in.pauli);
          break;
        case Op::kReset: {
          uint32_t q = in.qubits[0];
          PauliString zq = PauliString::single(c.n_qubits, 'Z', q);
          if (fr.state.measurement_random(zq)) {
            Frame other = fr;
            other.state.measure_pauli(zq, 1, rng);
            other.state.apply_x(q);
            other.prob *= 0.5;
            other.next_instr = k + 1;
            if (other.prob >= opts.prune_threshold) stack.push_back(std::move(other));
            fr.state.measure_pauli(zq, 0, rng);
            fr.prob *= 0.5;
            if (fr.prob < opts.prune_threshold) pruned = true;
          } else {
            auto m = fr.state.measure_pauli(zq, std::nullopt, rng);
            if (m.outcome) fr.state.apply_x(q);
          }
          break;
        }
        case Op::kMeasure: {
          uint32_t q = in.qubits[0];
          bool flip = false;
          for (const auto* f : by_index[k])
            if (f->flip_record) flip = !flip;
          PauliString p = PauliString::single(c.n_qubits, in.basis == 'X' ? 'X' : 'Z', q);
          int outcome;
          if (fr.state.measurement_random(p)) {
            Frame other = fr;
            other.state.measure_pauli(p, 1, rng);
            other.prob *= 0.5;
            other.records[size_t(in.record)] = 1 ^ int(flip);
            other.next_instr = k + 1;
            for (const auto* f : by_index[k])
              if (!f->flip_record) other.state.apply_pauli(f->pauli);
            bool rej = false;
            for (int pi : sched.ready[size_t(in.record)]) {
              const auto& ps = c.postselect[size_t(pi)];
              if (parity_of(ps.records, other.records) != ps.parity) rej = true;
            }
            if (rej) {
              if (opts.drop_rejected) {
                out.rejected_probability += other.prob;
              } else {
                other.rejected = true;
                if (other.prob >= opts.prune_threshold) stack.push_back(std::move(other));
              }
            } else if (other.prob >= opts.prune_threshold) {
              stack.push_back(std::move(other));
            }
            fr.state.measure_pauli(p, 0, rng);
            fr.prob *= 0.5;
            outcome = 0;
            if (fr.prob < opts.prune_threshold) {
              pruned = true;
              break;
            }
          } else {
            outcome = fr.state.measure_pauli(p, std::nullopt, rng).outcome;
          }
          fr.records[size_t(in.record)] = outcome ^ int(flip);
          for (const auto* f : by_index[k])
            if (!f->flip_record) fr.state.apply_pauli(f->pauli);
          for (int pi : sched.ready[size_t(in.record)]) {
            const auto& ps = c.postselect[size_t(pi)];
            if (parity_of(ps.records, fr.records) != ps.parity) {
              if (opts.drop_rejected) {
                out.rejected_probability += fr.prob;
                pruned = true;
              } else {
                fr.rejected = true;
              }
            }
          }
          break;
        }
      }
      if (pruned) break;
      if (in.op != Op::kMeasure) {
        for (const auto* f : by_index[k]) {
          if (f->flip_record) throw std::invalid_argument("record flip on non-measurement");
          fr.state.apply_pauli(f->pauli);
        }
      }
      fr.next_instr = k + 1;
    }
    if (pruned) continue;
    if (fr.next_instr >= c.instructions.size()) {
      TabBranch b{std::move(fr.records), fr.prob, false, std::move(fr.state)};
      b.accepted = !fr.rejected && c.accepted(b.records);
      out.branches.push_back(std::move(b));
      if (++live > opts.branch_cap)
        throw ResourceError("enumerate_branches_tab: branch cap exceeded");
    }
  }
  return out;
}

void conjugate_pauli_through(PauliString& p, const Instruction& in) {
  auto xb = [&](uint32_t q) { return p.x_bit(q); };
  auto zb = [&](uint32_t q) { return p.z_bit(q); };
  switch (in.op) {
    case Op::kGate: {
      const std::string& g = in.gate;
      if (g == "H") {
        uint32_t q = in.qubits[0];
        if (xb(q) && zb(q)) p.flip_sign();
        bool x = xb(q), z = zb(q);
        p.set_x(q, z);
        p.set_z(q, x);
      } else if (g == "S") {
        uint32_t q = in.qubits[0];
        if (xb(q) && zb(q)) p.flip_sign();
        p.set_z(q, zb(q) ^ xb(q));
      } else if (g == "SDG") {
        uint32_t q = in.qubits[0];
        if (xb(q) && !zb(q)) p.flip_sign();
        p.set_z(q, zb(q) ^ xb(q));
      } else if (g == "X") {
        if (zb(in.qubits[0])) p.flip_sign();
      } else if (g == "Y") {
        uint32_t q = in.qubits[0];
        if (xb(q) != zb(q)) p.flip_sign();
      } else if (g == "Z") {
        if (xb(in.qubits[0])) p.flip_sign();
      } else if (g == "CX") {
        uint32_t c = in.qubits[0], t = in.qubits[1];
        if (xb(c) && zb(t) && (xb(t) == zb(c))) p.flip_sign();
        p.set_x(t, xb(t) ^ xb(c));
        p.set_z(c, zb(c) ^ zb(t));
      } else if (g == "CZ") {
        Instruction h1;
        h1.op = Op::kGate;
        h1.gate = "H";
        h1.qubits = {in.qubits[1]};
        Instruction cx;
        cx.op = Op::kGate;
        cx.gate = "CX";
        cx.qubits = in.qubits;
        conjugate_pauli_through(p, h1);
        conjugate_pauli_through(p, cx);
        conjugate_pauli_through(p, h1);
      } else if (g == "SWAP") {
        uint32_t a = in.qubits[0], b = in.qubits[1];
        bool xa = xb(a), za = zb(a), x2 = xb(b), z2 = zb(b);
        p.set_x(a, x2);
        p.set_z(a, z2);
        p.set_x(b, xa);
        p.set_z(b, za);
      } else {
        throw PropagationUnsupported("pauli propagation through non-Clifford gate " + g);
      }
      break;
    }
    case Op::kMeasure:
    case Op::kReset: {
      uint32_t q = in.qubits[0];
      if (xb(q) || zb(q))
        throw PropagationUnsupported("pauli propagation through measurement/reset on its support");
      break;
    }
    case Op::kPermute:
      p = p.permuted(in.perm);
      break;
    case Op::kCondPauli:
      break;  // commutes up to an overall sign that detection logic ignores
  }
}

PauliString propagate_pauli(const Circuit& c, const PauliString& fault, int from_index) {
  PauliString p = fault;
  if (p.n != c.n_qubits) throw std::invalid_argument("propagate_pauli: size mismatch");
  for (size_t k = size_t(from_index + 1); k < c.instructions.size(); k++)
    conjugate_pauli_through(p, c.instructions[k]);
  return p;
}

}  // namespace cc832
