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

#include "cc832/codes.hpp"

#include <algorithm>

#include <json.hpp>

namespace cc832 {

namespace {

PauliString xs(uint32_t n, std::vector<uint32_t> support) {
  return PauliString::on_support(n, 'X', support);
}
PauliString zs(uint32_t n, std::vector<uint32_t> support) {
  return PauliString::on_support(n, 'Z', support);
}

// GF(2) span membership of p (sign ignored).
bool in_span(const std::vector<PauliString>& rows, const PauliString& p) {
  auto basis = stabilizer_rref(rows);
  PauliString rem = p;
  rem.clear_phase();
  for (const auto& b : basis) {
    int pivot = -1;
    bool pivot_is_x = true;
    for (uint32_t col = 0; col < p.n && pivot < 0; col++) {
      if (b.x_bit(col)) {
        pivot = int(col);
        pivot_is_x = true;
      } else if (b.x == 0 && b.z_bit(col)) {
        pivot = int(col);
        pivot_is_x = false;
      }
    }
    if (pivot < 0) continue;
    bool bit = pivot_is_x ? rem.x_bit(uint32_t(pivot)) : rem.z_bit(uint32_t(pivot));
    if (bit) rem = pauli_mul(rem, b);
  }
  return rem.x == 0 && rem.z == 0;
}

}  // namespace

bool CodeSpec::in_stabilizer_group(const PauliString& p) const {
  return in_span(stabilizers, p);
}

StabilizerState CodeSpec::zero_state() const {
  std::vector<PauliString> gens = stabilizers;
  gens.insert(gens.end(), logical_z.begin(), logical_z.end());
  return StabilizerState::from_generators(n, gens);
}

StabilizerState CodeSpec::plus_state() const {
  std::vector<PauliString> gens = stabilizers;
  gens.insert(gens.end(), logical_x.begin(), logical_x.end());
  return StabilizerState::from_generators(n, gens);
}

void CodeSpec::check() const {
  if (stabilizers.size() != n - k) throw std::logic_error(name + ": wrong stabilizer count");
  if (logical_x.size() != k || logical_z.size() != k)
    throw std::logic_error(name + ": wrong logical count");
  for (size_t i = 0; i < stabilizers.size(); i++) {
    for (size_t j = i + 1; j < stabilizers.size(); j++)
      if (!stabilizers[i].commutes_with(stabilizers[j]))
        throw std::logic_error(name + ": stabilizers do not commute");
    for (uint32_t a = 0; a < k; a++) {
      if (!stabilizers[i].commutes_with(logical_x[a]) ||
          !stabilizers[i].commutes_with(logical_z[a]))
        throw std::logic_error(name + ": logicals do not commute with stabilizers");
    }
  }
  for (uint32_t a = 0; a < k; a++) {
    for (uint32_t b = 0; b < k; b++) {
      bool anti = !logical_x[a].commutes_with(logical_z[b]);
      if (anti != (a == b)) throw std::logic_error(name + ": logical pairing broken");
    }
  }
  auto rref = stabilizer_rref(stabilizers);
  for (const auto& r : rref)
    if (r.is_identity()) throw std::logic_error(name + ": stabilizers not independent");
  // Distance by exhaustive enumeration of all Paulis up to weight d.
  if (n <= 12) {
    auto is_logical = [&](const PauliString& p) {
      for (const auto& s : stabilizers)
        if (!p.commutes_with(s)) return false;
      return !in_stabilizer_group(p);
    };
    uint32_t min_found = n + 1;
    std::vector<uint32_t> idx;
    auto scan = [&](auto&& self, uint32_t start, uint32_t left) -> void {
      if (left == 0) {
        uint32_t w = uint32_t(idx.size());
        uint32_t combos = 1;
        for (uint32_t i = 0; i < w; i++) combos *= 3;
        for (uint32_t m = 0; m < combos; m++) {
          PauliString p(n);
          uint32_t mm = m;
          for (uint32_t i = 0; i < w; i++) {
            p.set_letter(idx[i], "XZY"[mm % 3]);
            mm /= 3;
          }
          if (is_logical(p)) {
            min_found = std::min(min_found, w);
            return;
          }
        }
        return;
      }
      for (uint32_t q = start; q + left <= n && min_found > uint32_t(idx.size()) + left; q++) {
        idx.push_back(q);
        self(self, q + 1, left - 1);
        idx.pop_back();
      }
    };
    for (uint32_t w = 1; w <= d && min_found > d; w++) scan(scan, 0, w);
    if (min_found != d) throw std::logic_error(name + ": distance mismatch");
  }
}

CodeSpec code_832() {
  CodeSpec c;
  c.name = "cube_832";
  c.n = 8;
  c.k = 3;
  c.d = 2;
  // Qubit q sits at cube vertex (x,y,z) with q = 4x + 2y + z.
  c.stabilizers = {
      xs(8, {0, 1, 2, 3, 4, 5, 6, 7}),
      zs(8, {0, 1, 2, 3, 4, 5, 6, 7}),
      zs(8, {0, 1, 2, 3}),  // face x = 0
      zs(8, {0, 1, 4, 5}),  // face y = 0
      zs(8, {0, 2, 4, 6}),  // face z = 0
  };
  c.logical_x = {xs(8, {0, 1, 2, 3}), xs(8, {0, 1, 4, 5}), xs(8, {0, 2, 4, 6})};
  c.logical_z = {zs(8, {0, 4}), zs(8, {0, 2}), zs(8, {0, 1})};
  c.faces = {
      {"x0", {0, 1, 2, 3}}, {"x1", {4, 5, 6, 7}}, {"y0", {0, 1, 4, 5}},
      {"y1", {2, 3, 6, 7}}, {"z0", {0, 2, 4, 6}}, {"z1", {1, 3, 5, 7}},
  };
  // Stabilizer-group symmetries; logical actions are derived by
  // permutation_action, never assumed.
  c.symmetries = {
      {"identity", {0, 1, 2, 3, 4, 5, 6, 7}},
      // Reflect the top face (z=1) along y, bottom face fixed.
      {"top_face_reflection", {0, 3, 2, 1, 4, 7, 6, 5}},
      // Reflect the side face (y=1) along z, y=0 face fixed.
      {"side_face_reflection", {0, 1, 3, 2, 4, 5, 7, 6}},
      // Reflect the back face (x=1) along z, x=0 face fixed.
      {"back_face_reflection", {0, 1, 2, 3, 5, 4, 7, 6}},
      // Mirror through the diagonal plane y=z.
      {"diagonal_reflection", {0, 2, 1, 3, 4, 6, 5, 7}},
  };
  return c;
}

CodeSpec code_422() {
  CodeSpec c;
  c.name = "square_422";
  c.n = 4;
  c.k = 2;
  c.d = 2;
  c.stabilizers = {xs(4, {0, 1, 2, 3}), zs(4, {0, 1, 2, 3})};
  c.logical_x = {xs(4, {0, 2}), xs(4, {0, 1})};
  c.logical_z = {zs(4, {0, 1}), zs(4, {0, 2})};
  c.faces = {{"all", {0, 1, 2, 3}}};
  c.symmetries = {{"identity", {0, 1, 2, 3}}};
  return c;
}

bool LogicalMap::is_identity() const {
  for (size_t i = 0; i < x_images.size(); i++) {
    if (x_images[i].x_factors != std::vector<uint32_t>{uint32_t(i)} ||
        !x_images[i].z_factors.empty())
      return false;
    if (z_images[i].z_factors != std::vector<uint32_t>{uint32_t(i)} ||
        !z_images[i].x_factors.empty())
      return false;
  }
  return true;
}

// Decomposes a logical operator over the logical basis via symplectic
// pairing: logical X_i appears iff the image anticommutes with Z_i.
static LogicalMap::Entry decompose(const CodeSpec& code, const PauliString& image) {
  LogicalMap::Entry e;
  e.image = image;
  for (uint32_t i = 0; i < code.k; i++) {
    if (!image.commutes_with(code.logical_z[i])) e.x_factors.push_back(i);
    if (!image.commutes_with(code.logical_x[i])) e.z_factors.push_back(i);
  }
  PauliString rem = image;
  rem.clear_phase();
  for (uint32_t i : e.x_factors) rem = pauli_mul(rem, code.logical_x[i]);
  for (uint32_t i : e.z_factors) rem = pauli_mul(rem, code.logical_z[i]);
  if (!code.in_stabilizer_group(rem))
    throw std::logic_error("logical image does not decompose over the logical algebra");
  return e;
}

LogicalMap permutation_action(const CodeSpec& code, const std::vector<uint32_t>& perm) {
  if (perm.size() != code.n) throw std::invalid_argument("permutation size mismatch");
  for (const auto& s : code.stabilizers) {
    if (!in_span(code.stabilizers, s.permuted(perm)))
      throw NotASymmetryError("permutation does not fix the stabilizer group");
  }
  LogicalMap map;
  for (uint32_t i = 0; i < code.k; i++) {
    map.x_images.push_back(decompose(code, code.logical_x[i].permuted(perm)));
    map.z_images.push_back(decompose(code, code.logical_z[i].permuted(perm)));
  }
  return map;
}

DestructiveMeasurement destructive_face_measurement(const CodeSpec& code,
                                                    const std::string& face_name) {
  const CodeSpec::Face* face = nullptr;
  for (const auto& f : code.faces)
    if (f.name == face_name) face = &f;
  if (!face) throw std::invalid_argument("unknown face: " + face_name);
  std::vector<uint32_t> fq(face->qubits.begin(), face->qubits.end());
  std::sort(fq.begin(), fq.end());
  int measured = -1;
  for (uint32_t i = 0; i < code.k; i++) {
    if (code.logical_x[i] == PauliString::on_support(code.n, 'X', fq)) measured = int(i);
  }
  if (measured < 0)
    throw std::invalid_argument("face " + face_name + " does not support a logical X");

  DestructiveMeasurement dm;
  dm.measured_logical = uint32_t(measured);
  dm.face = fq;
  for (uint32_t q = 0; q < code.n; q++)
    if (std::find(fq.begin(), fq.end(), q) == fq.end()) dm.opposite.push_back(q);

  uint64_t opp_mask = 0;
  for (uint32_t q : dm.opposite) opp_mask |= 1ull << q;

  // Z logicals keep a representative on the opposite face (multiply by Z
  // stabilizers until the support clears the measured face).
  auto z_rep_on_opposite = [&](const PauliString& zlog) -> PauliString {
    std::vector<PauliString> zstabs;
    for (const auto& s : code.stabilizers)
      if (s.x == 0) zstabs.push_back(s);
    uint32_t m = uint32_t(zstabs.size());
    for (uint32_t bits = 0; bits < (1u << m); bits++) {
      PauliString cand = zlog;
      cand.clear_phase();
      for (uint32_t j = 0; j < m; j++)
        if ((bits >> j) & 1) cand = pauli_mul(cand, zstabs[j]);
      if ((cand.z & ~opp_mask) == 0 && cand.x == 0) {
        cand.clear_phase();
        return cand;
      }
    }
    throw std::logic_error("no opposite-face Z representative exists");
  };

  for (uint32_t i = 0; i < code.k; i++) {
    if (i == dm.measured_logical) continue;
    dm.surviving_logicals.push_back(i);
    const PauliString& lx = code.logical_x[i];
    dm.residual_x.push_back(PauliString(code.n, lx.x & opp_mask, 0, false));
    std::vector<uint32_t> sign_src;
    for (uint32_t q : fq)
      if (lx.x_bit(q)) sign_src.push_back(q);
    dm.x_sign_sources.push_back(sign_src);
    dm.residual_z.push_back(z_rep_on_opposite(code.logical_z[i]));
  }

  dm.s_x_face_part = fq;
  dm.s_x_opposite_part = dm.opposite;

  auto relabel = [&](const PauliString& p) {
    PauliString r(uint32_t(dm.opposite.size()));
    for (size_t j = 0; j < dm.opposite.size(); j++) {
      r.set_x(uint32_t(j), p.x_bit(dm.opposite[j]));
      r.set_z(uint32_t(j), p.z_bit(dm.opposite[j]));
    }
    return r;
  };
  CodeSpec res;
  res.name = code.name + "_residual_" + face_name;
  res.n = uint32_t(dm.opposite.size());
  res.k = code.k - 1;
  res.d = 2;
  res.stabilizers = {PauliString::on_support(res.n, 'X', {0, 1, 2, 3}),
                     PauliString::on_support(res.n, 'Z', {0, 1, 2, 3})};
  for (size_t j = 0; j < dm.surviving_logicals.size(); j++) {
    res.logical_x.push_back(relabel(dm.residual_x[j]));
    res.logical_z.push_back(relabel(dm.residual_z[j]));
  }
  res.faces = {{"all", {0, 1, 2, 3}}};
  dm.residual = res;
  return dm;
}

CodeSpec joint_code_832_422() {
  CodeSpec a = code_832(), b = code_422(), j;
  j.name = "joint_832_422";
  j.n = 12;
  j.k = 5;
  j.d = 2;
  auto lift_a = [&](const PauliString& p) { return PauliString(12, p.x, p.z, p.neg()); };
  auto lift_b = [&](const PauliString& p) { return PauliString(12, p.x << 8, p.z << 8, p.neg()); };
  for (const auto& s : a.stabilizers) j.stabilizers.push_back(lift_a(s));
  for (const auto& s : b.stabilizers) j.stabilizers.push_back(lift_b(s));
  for (const auto& l : a.logical_x) j.logical_x.push_back(lift_a(l));
  for (const auto& l : b.logical_x) j.logical_x.push_back(lift_b(l));
  for (const auto& l : a.logical_z) j.logical_z.push_back(lift_a(l));
  for (const auto& l : b.logical_z) j.logical_z.push_back(lift_b(l));
  return j;
}

LogicalMap transversal_cnot_832_422(const std::string& face_name,
                                    const std::vector<uint32_t>& pairing) {
  CodeSpec cube = code_832();
  const CodeSpec::Face* face = nullptr;
  for (const auto& f : cube.faces)
    if (f.name == face_name) face = &f;
  if (!face) throw std::invalid_argument("unknown face: " + face_name);
  if (pairing.size() != 4) throw std::invalid_argument("pairing must list 4 block qubits");
  {
    std::vector<bool> seen(4, false);
    for (uint32_t t : pairing) {
      if (t >= 4 || seen[t]) throw std::invalid_argument("pairing must be a bijection onto 0..3");
      seen[t] = true;
    }
  }
  std::vector<uint32_t> fq(face->qubits.begin(), face->qubits.end());
  std::sort(fq.begin(), fq.end());

  CodeSpec joint = joint_code_832_422();
  // Conjugation through the four physical CNOTs: face controls, 422 targets.
  auto conj = [&](PauliString p) {
    for (size_t i = 0; i < 4; i++) {
      uint32_t c = fq[i], t = 8 + pairing[i];
      bool xc = p.x_bit(c), zc = p.z_bit(c), xt = p.x_bit(t), zt = p.z_bit(t);
      if (xc && zt && (xt == zc)) p.flip_sign();
      p.set_x(t, xt ^ xc);
      p.set_z(c, zc ^ zt);
    }
    return p;
  };
  for (const auto& s : joint.stabilizers) {
    if (!in_span(joint.stabilizers, conj(s)))
      throw std::invalid_argument("face pairing does not preserve the joint stabilizer group");
  }
  LogicalMap map;
  for (uint32_t i = 0; i < joint.k; i++) {
    map.x_images.push_back(decompose(joint, conj(joint.logical_x[i])));
    map.z_images.push_back(decompose(joint, conj(joint.logical_z[i])));
  }
  return map;
}

std::string CodeSpec::to_json() const {
  nlohmann::json doc;
  doc["name"] = name;
  doc["n"] = n;
  doc["k"] = k;
  doc["d"] = d;
  doc["stabilizers"] = nlohmann::json::array();
  doc["logical_x"] = nlohmann::json::array();
  doc["logical_z"] = nlohmann::json::array();
  for (const auto& s : stabilizers) doc["stabilizers"].push_back(s.str());
  for (const auto& l : logical_x) doc["logical_x"].push_back(l.str());
  for (const auto& l : logical_z) doc["logical_z"].push_back(l.str());
  for (const auto& f : faces) doc["faces"][f.name] = f.qubits;
  for (const auto& [nm, p] : symmetries) doc["symmetries"][nm] = p;
  return doc.dump(2);
}

}  // namespace cc832
