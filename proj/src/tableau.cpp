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

#include "cc832/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cc832 {

StabilizerState::StabilizerState(uint32_t n_qubits) : n_(n_qubits) {
  PauliString::check_size(n_qubits);
  xs_.assign(2 * n_, 0);
  zs_.assign(2 * n_, 0);
  rs_.assign(2 * n_, 0);
  for (uint32_t i = 0; i < n_; i++) {
    xs_[i] = 1ull << i;        // destabilizer X_i
    zs_[n_ + i] = 1ull << i;   // stabilizer Z_i
  }
}

PauliString StabilizerState::row_pauli(uint32_t r) const {
  return PauliString(n_, xs_[r], zs_[r], (rs_[r] & 3) >= 2);
}

void StabilizerState::row_mult(uint32_t h, uint32_t i) {
  uint64_t x1 = xs_[i], z1 = zs_[i], x2 = xs_[h], z2 = zs_[h];
  uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
  int delta = std::popcount(x1 & z1) + std::popcount(x2 & z2) +
              2 * std::popcount(z1 & x2) - std::popcount(x3 & z3);
  rs_[h] = uint8_t((rs_[h] + rs_[i] + delta) & 3);
  xs_[h] = x3;
  zs_[h] = z3;
}

void StabilizerState::apply_h(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++) {
    uint64_t xb = xs_[r] & m, zb = zs_[r] & m;
    if (xb && zb) rs_[r] = uint8_t((rs_[r] + 2) & 3);
    xs_[r] = (xs_[r] & ~m) | zb;
    zs_[r] = (zs_[r] & ~m) | xb;
  }
}

void StabilizerState::apply_s(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++) {
    if ((xs_[r] & m) && (zs_[r] & m)) rs_[r] = uint8_t((rs_[r] + 2) & 3);
    if (xs_[r] & m) zs_[r] ^= m;
  }
}

void StabilizerState::apply_sdg(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++) {
    if ((xs_[r] & m) && !(zs_[r] & m)) rs_[r] = uint8_t((rs_[r] + 2) & 3);
    if (xs_[r] & m) zs_[r] ^= m;
  }
}

void StabilizerState::apply_x(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++)
    if (zs_[r] & m) rs_[r] = uint8_t((rs_[r] + 2) & 3);
}

void StabilizerState::apply_z(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++)
    if (xs_[r] & m) rs_[r] = uint8_t((rs_[r] + 2) & 3);
}

void StabilizerState::apply_y(uint32_t q) {
  uint64_t m = 1ull << q;
  for (uint32_t r = 0; r < 2 * n_; r++)
    if (bool(xs_[r] & m) != bool(zs_[r] & m)) rs_[r] = uint8_t((rs_[r] + 2) & 3);
}

void StabilizerState::apply_cx(uint32_t c, uint32_t t) {
  if (c == t) throw std::invalid_argument("cx: control equals target");
  uint64_t mc = 1ull << c, mt = 1ull << t;
  for (uint32_t r = 0; r < 2 * n_; r++) {
    bool xc = xs_[r] & mc, zc = zs_[r] & mc, xt = xs_[r] & mt, zt = zs_[r] & mt;
    if (xc && zt && (xt == zc)) rs_[r] = uint8_t((rs_[r] + 2) & 3);
    if (xc) xs_[r] ^= mt;
    if (zt) zs_[r] ^= mc;
  }
}

void StabilizerState::apply_cz(uint32_t a, uint32_t b) {
  apply_h(b);
  apply_cx(a, b);
  apply_h(b);
}

void StabilizerState::apply_swap(uint32_t a, uint32_t b) {
  if (a == b) throw std::invalid_argument("swap: identical qubits");
  uint64_t ma = 1ull << a, mb = 1ull << b;
  for (uint32_t r = 0; r < 2 * n_; r++) {
    bool xa = xs_[r] & ma, xb = xs_[r] & mb, za = zs_[r] & ma, zb = zs_[r] & mb;
    xs_[r] = (xs_[r] & ~(ma | mb)) | (xa ? mb : 0) | (xb ? ma : 0);
    zs_[r] = (zs_[r] & ~(ma | mb)) | (za ? mb : 0) | (zb ? ma : 0);
  }
}

void StabilizerState::apply_permutation(const std::vector<uint32_t>& perm) {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  for (uint32_t r = 0; r < 2 * n_; r++) {
    uint64_t nx = 0, nz = 0;
    for (uint32_t q = 0; q < n_; q++) {
      if (xs_[r] & (1ull << q)) nx |= 1ull << perm[q];
      if (zs_[r] & (1ull << q)) nz |= 1ull << perm[q];
    }
    xs_[r] = nx;
    zs_[r] = nz;
  }
}

void StabilizerState::apply_pauli(const PauliString& p) {
  if (p.n != n_) throw std::invalid_argument("pauli size mismatch");
  for (uint32_t r = 0; r < 2 * n_; r++) {
    if ((std::popcount(xs_[r] & p.z) ^ std::popcount(zs_[r] & p.x)) & 1)
      rs_[r] = uint8_t((rs_[r] + 2) & 3);
  }
}

void StabilizerState::apply_gate(const std::string& name, const std::vector<uint32_t>& qubits) {
  for (uint32_t q : qubits)
    if (q >= n_) throw std::invalid_argument("gate qubit out of range");
  auto need = [&](size_t k) {
    if (qubits.size() != k) throw std::invalid_argument("wrong arity for gate " + name);
  };
  if (name == "H") { need(1); apply_h(qubits[0]); }
  else if (name == "S") { need(1); apply_s(qubits[0]); }
  else if (name == "SDG") { need(1); apply_sdg(qubits[0]); }
  else if (name == "X") { need(1); apply_x(qubits[0]); }
  else if (name == "Y") { need(1); apply_y(qubits[0]); }
  else if (name == "Z") { need(1); apply_z(qubits[0]); }
  else if (name == "CX") { need(2); apply_cx(qubits[0], qubits[1]); }
  else if (name == "CZ") { need(2); apply_cz(qubits[0], qubits[1]); }
  else if (name == "SWAP") { need(2); apply_swap(qubits[0], qubits[1]); }
  else throw std::invalid_argument("tableau engine cannot apply gate " + name);
}

MeasureResult StabilizerState::measure_pauli(const PauliString& p, std::optional<int> forced,
                                             RngStream& rng) {
  if (p.n != n_) throw std::invalid_argument("measure_pauli: size mismatch");
  // Random case: some stabilizer anticommutes with p.
  uint32_t pivot = 2 * n_;
  for (uint32_t i = n_; i < 2 * n_; i++) {
    if (row_anticommutes(i, p)) { pivot = i; break; }
  }
  if (pivot < 2 * n_) {
    int out = forced ? *forced : (rng.next_bool() ? 1 : 0);
    for (uint32_t r = 0; r < 2 * n_; r++) {
      if (r != pivot && row_anticommutes(r, p)) row_mult(r, pivot);
    }
    // Destabilizer partner takes the old stabilizer; new stabilizer is +/-p.
    xs_[pivot - n_] = xs_[pivot];
    zs_[pivot - n_] = zs_[pivot];
    rs_[pivot - n_] = rs_[pivot];
    xs_[pivot] = p.x;
    zs_[pivot] = p.z;
    rs_[pivot] = uint8_t(((p.neg() ? 2 : 0) + (out ? 2 : 0)) & 3);
    return {out, false};
  }
  // Deterministic: p is +/- a product of stabilizer rows.
  auto val = group_value(p);
  if (!val) throw std::logic_error("measure_pauli: operator commutes with group but is not in it");
  int out = (*val + (p.neg() ? 1 : 0)) & 1;
  if (forced && *forced != out)
    throw std::runtime_error("measure_pauli: forced outcome contradicts deterministic value");
  return {out, true};
}

std::optional<int> StabilizerState::group_value(const PauliString& p) const {
  if (p.n != n_) throw std::invalid_argument("group_value: size mismatch");
  // Accumulate the product of stabilizer rows whose destabilizer partner
  // anticommutes with p.
  uint64_t ax = 0, az = 0;
  int ar = 0;
  for (uint32_t i = 0; i < n_; i++) {
    if (!row_anticommutes(i, p)) continue;
    uint32_t s = n_ + i;
    uint64_t x1 = ax, z1 = az, x2 = xs_[s], z2 = zs_[s];
    uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    ar += rs_[s] + std::popcount(x1 & z1) + std::popcount(x2 & z2) +
          2 * std::popcount(z1 & x2) - std::popcount(x3 & z3);
    ax = x3;
    az = z3;
  }
  if (ax != p.x || az != p.z) return std::nullopt;
  ar = ((ar % 4) + 4) % 4;
  assert(ar % 2 == 0);
  return (ar >> 1) & 1;
}

bool StabilizerState::stabilizes(const PauliString& p) const {
  auto v = group_value(p);
  return v && ((*v ^ (p.neg() ? 1 : 0)) == 0);
}

MeasureResult StabilizerState::measure_qubit(uint32_t q, char basis, std::optional<int> forced,
                                             RngStream& rng) {
  if (q >= n_) throw std::invalid_argument("measure_qubit: index out of range");
  return measure_pauli(PauliString::single(n_, basis == 'X' ? 'X' : 'Z', q), forced, rng);
}

void StabilizerState::reset_qubit(uint32_t q, RngStream& rng) {
  auto m = measure_qubit(q, 'Z', std::nullopt, rng);
  if (m.outcome) apply_x(q);
}

std::vector<PauliString> stabilizer_rref(std::vector<PauliString> rows) {
  if (rows.empty()) return rows;
  uint32_t n = rows[0].n;
  size_t rank = 0;
  auto eliminate = [&](auto bit_of) {
    for (uint32_t col = 0; col < n; col++) {
      size_t piv = rank;
      while (piv < rows.size() && !bit_of(rows[piv], col)) piv++;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      for (size_t j = 0; j < rows.size(); j++) {
        if (j != rank && bit_of(rows[j], col)) rows[j] = pauli_mul(rows[j], rows[rank]);
      }
      rank++;
    }
  };
  eliminate([](const PauliString& p, uint32_t c) { return p.x_bit(c); });
  eliminate([](const PauliString& p, uint32_t c) { return p.z_bit(c); });
  return rows;
}

static CanonicalKey serialize_rows(const std::vector<PauliString>& rows) {
  CanonicalKey key;
  key.reserve(rows.size() * 17);
  for (const auto& r : rows) {
    for (int b = 0; b < 8; b++) key.push_back(char((r.x >> (8 * b)) & 0xff));
    for (int b = 0; b < 8; b++) key.push_back(char((r.z >> (8 * b)) & 0xff));
    key.push_back(r.neg() ? 1 : 0);
  }
  return key;
}

CanonicalKey StabilizerState::canonical_key() const {
  std::vector<PauliString> rows;
  rows.reserve(n_);
  for (uint32_t i = 0; i < n_; i++) rows.push_back(stabilizer(i));
  return serialize_rows(stabilizer_rref(std::move(rows)));
}

std::optional<std::vector<PauliString>> StabilizerState::restricted_generators(
    const std::vector<uint32_t>& qubits) const {
  // Eliminate over the complement columns first; rows left with no support
  // outside `qubits` span the restricted subgroup.
  std::vector<bool> keep(n_, false);
  for (uint32_t q : qubits) {
    if (q >= n_) throw std::invalid_argument("restricted_generators: qubit out of range");
    keep[q] = true;
  }
  std::vector<PauliString> rows;
  rows.reserve(n_);
  for (uint32_t i = 0; i < n_; i++) rows.push_back(stabilizer(i));
  size_t rank = 0;
  auto eliminate = [&](auto bit_of) {
    for (uint32_t col = 0; col < n_; col++) {
      if (keep[col]) continue;
      size_t piv = rank;
      while (piv < rows.size() && !bit_of(rows[piv], col)) piv++;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      for (size_t j = 0; j < rows.size(); j++)
        if (j != rank && bit_of(rows[j], col)) rows[j] = pauli_mul(rows[j], rows[rank]);
      rank++;
    }
  };
  eliminate([](const PauliString& p, uint32_t c) { return p.x_bit(c); });
  eliminate([](const PauliString& p, uint32_t c) { return p.z_bit(c); });
  if (rows.size() - rank < qubits.size()) return std::nullopt;
  std::vector<PauliString> out;
  for (size_t j = rank; j < rows.size(); j++) {
    PauliString sub(uint32_t(qubits.size()));
    sub.phase = rows[j].phase;
    for (size_t k = 0; k < qubits.size(); k++) {
      sub.set_x(uint32_t(k), rows[j].x_bit(qubits[k]));
      sub.set_z(uint32_t(k), rows[j].z_bit(qubits[k]));
    }
    out.push_back(sub);
  }
  return out;
}

CanonicalKey StabilizerState::canonical_key_on(const std::vector<uint32_t>& qubits) const {
  auto gens = restricted_generators(qubits);
  if (!gens) throw std::runtime_error("canonical_key_on: state is not pure on the given subset");
  return serialize_rows(stabilizer_rref(std::move(*gens)));
}

StabilizerState StabilizerState::from_generators(uint32_t n_qubits,
                                                 const std::vector<PauliString>& gens) {
  if (gens.size() != n_qubits)
    throw std::invalid_argument("from_generators: need exactly n generators");
  for (size_t i = 0; i < gens.size(); i++) {
    if (gens[i].n != n_qubits) throw std::invalid_argument("from_generators: size mismatch");
    for (size_t j = i + 1; j < gens.size(); j++)
      if (!gens[i].commutes_with(gens[j]))
        throw std::invalid_argument("from_generators: generators must commute");
  }
  StabilizerState st(n_qubits);
  RngStream rng(1, 1);
  // First fix the group, ignoring signs: measuring each generator makes it
  // (up to sign) a stabilizer; independence makes the final group equal to
  // the span of the inputs.  Deterministic values are left alone here; the
  // sign pass below corrects them.
  for (const auto& g : gens) {
    PauliString gp = g;
    gp.clear_phase();
    if (st.measurement_random(gp)) st.measure_pauli(gp, 0, rng);
  }
  // Then fix the signs: for sign mismatches, solve for a Pauli that
  // anticommutes with exactly the mismatched generators.
  uint32_t n = n_qubits;
  std::vector<int> mismatch(n, 0);
  // a[i][j] = 1 iff destabilizer j anticommutes with gens[i]; the fix Pauli
  // is a product of destabilizers, so we solve a * c = mismatch over GF(2).
  std::vector<uint64_t> a(n, 0);
  bool any = false;
  for (uint32_t i = 0; i < n; i++) {
    auto v = st.group_value(gens[i]);
    if (!v) throw std::logic_error("from_generators: generator missing from group");
    mismatch[i] = (*v ^ (gens[i].neg() ? 1 : 0));
    any = any || mismatch[i];
    for (uint32_t j = 0; j < n; j++)
      if (st.row_anticommutes(j, gens[i])) a[i] |= 1ull << j;
  }
  if (any) {
    // Gaussian elimination on [a | mismatch].
    std::vector<uint64_t> m = a;
    std::vector<int> rhs = mismatch;
    std::vector<int> pivot_col(n, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; col++) {
      uint32_t piv = rank;
      while (piv < n && !((m[piv] >> col) & 1)) piv++;
      if (piv == n) continue;
      std::swap(m[rank], m[piv]);
      std::swap(rhs[rank], rhs[piv]);
      for (uint32_t r = 0; r < n; r++) {
        if (r != rank && ((m[r] >> col) & 1)) {
          m[r] ^= m[rank];
          rhs[r] ^= rhs[rank];
        }
      }
      pivot_col[rank] = int(col);
      rank++;
    }
    uint64_t c = 0;
    for (uint32_t r = 0; r < rank; r++)
      if (rhs[r]) c |= 1ull << pivot_col[r];
    for (uint32_t r = rank; r < n; r++)
      if (rhs[r]) throw std::logic_error("from_generators: inconsistent sign system");
    PauliString fix(n_qubits);
    bool first = true;
    for (uint32_t j = 0; j < n; j++) {
      if ((c >> j) & 1) {
        PauliString d = st.destabilizer(j);
        d.clear_phase();
        fix = first ? d : pauli_mul(fix, d);
        first = false;
      }
    }
    st.apply_pauli(fix);
    for (uint32_t i = 0; i < n; i++) {
      if (!st.stabilizes(gens[i])) throw std::logic_error("from_generators: sign fix failed");
    }
  }
  return st;
}

std::optional<PauliString> StabilizerState::pauli_from(const StabilizerState& ref) const {
  if (ref.n_ != n_) throw std::invalid_argument("pauli_from: size mismatch");
  PauliString e(n_);
  bool first = true;
  for (uint32_t i = 0; i < n_; i++) {
    PauliString g = ref.stabilizer(i);
    auto v = group_value(g);
    if (!v) return std::nullopt;
    if ((*v ^ (g.neg() ? 1 : 0)) != 0) {
      PauliString d = ref.destabilizer(i);
      d.clear_phase();
      e = first ? d : pauli_mul(e, d);
      first = false;
    }
  }
  e.clear_phase();
  return e;
}

std::string StabilizerState::str() const {
  std::string s;
  for (uint32_t i = 0; i < n_; i++) {
    s += stabilizer(i).str();
    s += '\n';
  }
  return s;
}

}  // namespace cc832
