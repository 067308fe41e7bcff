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

#include "cc832/synth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace cc832 {

namespace {

// Dimension of the stabilizer subgroup supported on `qs` (0 if extraction
// fails).
int subgroup_dim(const StabilizerState& st, const std::vector<uint32_t>& qs) {
  auto gens = st.restricted_generators(qs);
  return gens ? int(gens->size()) : 0;
}

struct BlockSplit {
  std::vector<uint32_t> singles;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  bool ok = false;
};

BlockSplit split_blocks(const StabilizerState& st) {
  BlockSplit out;
  uint32_t n = st.num_qubits();
  std::vector<uint32_t> rest;
  for (uint32_t q = 0; q < n; q++) {
    if (subgroup_dim(st, {q}) >= 1) {
      out.singles.push_back(q);
    } else {
      rest.push_back(q);
    }
  }
  // Perfect matching over pairable leftovers (tiny sets; backtracking).
  std::map<uint32_t, std::vector<uint32_t>> adj;
  for (size_t i = 0; i < rest.size(); i++)
    for (size_t j = i + 1; j < rest.size(); j++)
      if (subgroup_dim(st, {rest[i], rest[j]}) >= 2) adj[rest[i]].push_back(rest[j]);
  std::vector<uint32_t> todo = rest;
  std::vector<std::pair<uint32_t, uint32_t>> chosen;
  auto match = [&](auto&& self) -> bool {
    if (todo.empty()) return true;
    uint32_t a = todo.front();
    for (uint32_t b : adj[a]) {
      if (std::find(todo.begin(), todo.end(), b) == todo.end()) continue;
      std::vector<uint32_t> saved = todo;
      todo.erase(std::remove_if(todo.begin(), todo.end(),
                                [&](uint32_t q) { return q == a || q == b; }),
                 todo.end());
      chosen.push_back({a, b});
      if (self(self)) return true;
      chosen.pop_back();
      todo = saved;
    }
    return false;
  };
  out.ok = match(match);
  out.pairs = chosen;
  return out;
}

// Gate list preparing a given single-qubit stabilizer state from |0>.
std::vector<std::string> single_qubit_init(const PauliString& gen) {
  bool x = gen.x != 0, z = gen.z != 0, neg = gen.neg();
  if (x && z) return neg ? std::vector<std::string>{"H", "SDG"} : std::vector<std::string>{"H", "S"};
  if (x) return neg ? std::vector<std::string>{"H", "Z"} : std::vector<std::string>{"H"};
  return neg ? std::vector<std::string>{"X"} : std::vector<std::string>{};
}

// Local-Clifford fixup table: canonical key of each entangled 2-qubit state
// reachable from |Phi+> -> single-qubit gate list ((gate, local qubit) pairs).
const std::vector<std::pair<CanonicalKey, std::vector<std::pair<std::string, uint32_t>>>>&
bell_fixup_table() {
  static const auto table = [] {
    std::vector<std::pair<CanonicalKey, std::vector<std::pair<std::string, uint32_t>>>> out;
    std::map<CanonicalKey, std::vector<std::pair<std::string, uint32_t>>> seen;
    RngStream rng(0, 0);
    StabilizerState bell(2);
    bell.apply_h(0);
    bell.apply_cx(0, 1);
    std::deque<std::pair<StabilizerState, std::vector<std::pair<std::string, uint32_t>>>> queue;
    queue.push_back({bell, {}});
    seen[bell.canonical_key()] = {};
    const std::vector<std::string> gates = {"H", "S", "X"};
    while (!queue.empty()) {
      auto [st, path] = queue.front();
      queue.pop_front();
      for (uint32_t q = 0; q < 2; q++) {
        for (const auto& g : gates) {
          StabilizerState next = st;
          next.apply_gate(g, {q});
          auto key = next.canonical_key();
          if (seen.count(key)) continue;
          auto np = path;
          np.push_back({g, q});
          seen[key] = np;
          queue.push_back({next, np});
        }
      }
    }
    for (auto& [k, v] : seen) out.push_back({k, v});
    return out;
  }();
  return table;
}

std::vector<std::pair<std::string, uint32_t>> bell_fixup(const StabilizerState& block) {
  auto key = block.canonical_key();
  for (const auto& [k, v] : bell_fixup_table())
    if (k == key) return v;
  throw std::logic_error("two-qubit block is not locally Bell-equivalent");
}

}  // namespace

bool is_block_product(const StabilizerState& st) { return split_blocks(st).ok; }

int bell_pair_count(const StabilizerState& st) {
  auto s = split_blocks(st);
  if (!s.ok) throw std::invalid_argument("state is not a block product");
  return int(s.pairs.size());
}

SynthResult min_cnot_prep(const StabilizerState& target, const AcceptFn& accept,
                          const SynthOptions& opts) {
  uint32_t n = target.num_qubits();
  std::vector<std::pair<uint32_t, uint32_t>> moves = opts.allowed_moves;
  if (moves.empty()) {
    for (uint32_t c = 0; c < n; c++)
      for (uint32_t t = 0; t < n; t++)
        if (c != t) moves.push_back({c, t});
  }
  std::sort(moves.begin(), moves.end());

  struct Meta {
    CanonicalKey parent;
    uint32_t move_c = 0, move_t = 0;
    int depth = 0;
  };
  std::unordered_map<CanonicalKey, Meta> visited;
  CanonicalKey start_key = target.canonical_key();
  visited[start_key] = {CanonicalKey(), 0, 0, 0};

  struct Best {
    int total = -1;
    CanonicalKey key;
    StabilizerState state;
  };
  std::optional<Best> best;
  auto consider = [&](const CanonicalKey& key, const StabilizerState& st, int depth) {
    if (!accept(st)) return;
    auto split = split_blocks(st);
    if (!split.ok) throw std::logic_error("accept predicate admitted a non-block-product state");
    int total = depth + int(split.pairs.size());
    if (!best || total < best->total) best = Best{total, key, st};
  };
  consider(start_key, target, 0);

  std::deque<std::pair<CanonicalKey, StabilizerState>> frontier;
  frontier.push_back({start_key, target});
  int depth = 0;
  while (!frontier.empty()) {
    if (best && depth + 1 >= best->total) break;  // deeper nodes cannot win
    size_t level_size = frontier.size();
    depth++;
    for (size_t i = 0; i < level_size; i++) {
      auto [key, st] = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& [c, t] : moves) {
        StabilizerState next = st;
        next.apply_cx(c, t);
        CanonicalKey nk = next.canonical_key();
        if (visited.count(nk)) continue;
        if (visited.size() >= opts.node_cap)
          throw ResourceError("min_cnot_prep: node cap exceeded");
        visited[nk] = {key, c, t, depth};
        consider(nk, next, depth);
        frontier.push_back({nk, std::move(next)});
      }
    }
  }
  if (!best) throw ExhaustionError("min_cnot_prep: accept set unreachable");

  // Backward moves from target to endpoint, in application order.
  std::vector<std::pair<uint32_t, uint32_t>> chain;
  CanonicalKey cur = best->key;
  while (cur != start_key) {
    const Meta& m = visited.at(cur);
    chain.push_back({m.move_c, m.move_t});
    cur = m.parent;
  }
  std::reverse(chain.begin(), chain.end());

  // Build the preparation circuit: endpoint init, then reversed moves.
  auto split = split_blocks(best->state);
  Circuit prep(n);
  prep.name = "synth_prep";
  for (uint32_t q : split.singles) {
    auto gens = best->state.restricted_generators({q});
    for (const auto& g : single_qubit_init((*gens)[0])) prep.gate(g, {q});
  }
  for (auto [a, b] : split.pairs) {
    prep.h(a);
    prep.cx(a, b);
    auto gens = best->state.restricted_generators({a, b});
    StabilizerState block = StabilizerState::from_generators(2, stabilizer_rref(*gens));
    for (const auto& [g, lq] : bell_fixup(block)) prep.gate(g, {lq == 0 ? a : b});
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) prep.cx(it->first, it->second);

  // The synthesized circuit must reproduce the target exactly.
  RngStream rng(0, 0);
  StabilizerState check(n);
  for (const auto& in : prep.instructions) check.apply_gate(in.gate, in.qubits);
  if (check.canonical_key() != start_key)
    throw std::logic_error("min_cnot_prep: synthesized circuit misses the target state");

  SynthResult res;
  res.prep = std::move(prep);
  res.moves = chain;
  res.endpoint_bell_pairs = int(split.pairs.size());
  res.total_cnots = int(chain.size()) + res.endpoint_bell_pairs;
  return res;
}

ErrorAnalysisReport detectable_error_analysis(const Circuit& prep,
                                              const std::vector<PauliString>& candidate_checks,
                                              const CodeSpec& code,
                                              const StabilizerState& target_state) {
  if (!prep.is_clifford())
    throw PropagationUnsupported("detectable_error_analysis: non-Clifford preparation");
  ErrorAnalysisReport rep;
  uint32_t n = prep.n_qubits;

  // All single faults: the 15 two-qubit Paulis after each two-qubit gate.
  std::vector<std::pair<int, PauliString>> injections;
  for (size_t k = 0; k < prep.instructions.size(); k++) {
    const auto& in = prep.instructions[k];
    if (!in.is_two_qubit_gate()) continue;
    uint32_t a = in.qubits[0], b = in.qubits[1];
    for (int la = 0; la < 4; la++) {
      for (int lb = 0; lb < 4; lb++) {
        if (la == 0 && lb == 0) continue;
        PauliString p(n);
        p.set_letter(a, "IXZY"[la]);
        p.set_letter(b, "IXZY"[lb]);
        injections.push_back({int(k), p});
      }
    }
  }

  std::vector<uint64_t> detected_by(injections.size(), 0);  // candidate bitmask
  std::vector<int> base_class(injections.size(), -1);
  for (size_t f = 0; f < injections.size(); f++) {
    auto [idx, p] = injections[f];
    PauliString residual = propagate_pauli(prep, p, idx);
    ErrorAnalysisReport::FaultRecord fr;
    fr.instr_index = idx;
    fr.inserted = p;
    fr.residual = residual;
    PauliString unsigned_res = residual;
    unsigned_res.clear_phase();
    if (target_state.group_value(unsigned_res)) {
      fr.category = ErrorAnalysisReport::kTrivial;
    } else {
      bool code_detects = false;
      for (const auto& s : code.stabilizers)
        if (!residual.commutes_with(s)) code_detects = true;
      for (size_t ci = 0; ci < candidate_checks.size(); ci++)
        if (!residual.commutes_with(candidate_checks[ci])) detected_by[f] |= 1ull << ci;
      if (code_detects || detected_by[f]) {
        fr.category = ErrorAnalysisReport::kDetected;
        if (!code_detects) base_class[f] = 1;  // needs a candidate
      } else {
        fr.category = ErrorAnalysisReport::kUndetectedLogical;
      }
      if (code_detects) base_class[f] = 0;
    }
    if (fr.category == ErrorAnalysisReport::kTrivial) rep.trivial_count++;
    if (fr.category == ErrorAnalysisReport::kDetected) rep.detected_count++;
    if (fr.category == ErrorAnalysisReport::kUndetectedLogical) rep.undetected_logical_count++;
    rep.faults.push_back(std::move(fr));
  }

  // Faults that only a candidate can catch (or that nothing catches).
  std::vector<uint64_t> must_cover;
  bool hopeless = false;
  for (size_t f = 0; f < injections.size(); f++) {
    if (rep.faults[f].category == ErrorAnalysisReport::kTrivial) continue;
    if (base_class[f] == 0) continue;  // code stabilizers already detect it
    if (detected_by[f] == 0) hopeless = true;
    must_cover.push_back(detected_by[f]);
  }
  if (!hopeless) {
    size_t m = candidate_checks.size();
    for (size_t size = 0; size <= std::min<size_t>(m, 3) && rep.minimal_sufficient_subsets.empty();
         size++) {
      std::vector<uint32_t> idx(size);
      auto scan = [&](auto&& self, size_t start, size_t left) -> void {
        if (left == 0) {
          uint64_t mask = 0;
          for (uint32_t i : idx) mask |= 1ull << i;
          for (uint64_t need : must_cover)
            if ((need & mask) == 0) return;
          rep.minimal_sufficient_subsets.push_back(idx);
          return;
        }
        for (size_t c = start; c + left <= m; c++) {
          idx[size - left] = uint32_t(c);
          self(self, c + 1, left - 1);
        }
      };
      scan(scan, 0, size);
    }
  }
  return rep;
}

}  // namespace cc832
