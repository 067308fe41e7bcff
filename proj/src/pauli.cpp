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

#include "cc832/pauli.hpp"

namespace cc832 {

PauliString PauliString::single(uint32_t n, char letter, uint32_t qubit) {
  if (qubit >= n) throw std::invalid_argument("qubit index out of range");
  PauliString p(n);
  p.set_letter(qubit, letter);
  return p;
}

PauliString PauliString::on_support(uint32_t n, char letter, const std::vector<uint32_t>& support) {
  PauliString p(n);
  for (uint32_t q : support) {
    if (q >= n) throw std::invalid_argument("qubit index out of range");
    p.set_letter(q, letter);
  }
  return p;
}

void PauliString::set_letter(uint32_t q, char letter) {
  switch (letter) {
    case 'I': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true);  set_z(q, false); break;
    case 'Z': set_x(q, false); set_z(q, true);  break;
    case 'Y': set_x(q, true);  set_z(q, true);  break;
    default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + letter);
  }
}

int pauli_phase_exponent(const PauliString& p, const PauliString& q) {
  // Per qubit: i^(x1 z1) X Z * i^(x2 z2) X Z = i^delta * i^(x3 z3) X Z with
  // delta = x1 z1 + x2 z2 + 2 z1 x2 - x3 z3 (mod 4); summed word-parallel.
  uint64_t x3 = p.x ^ q.x, z3 = p.z ^ q.z;
  int s = std::popcount(p.x & p.z) + std::popcount(q.x & q.z) +
          2 * std::popcount(p.z & q.x) - std::popcount(x3 & z3);
  return ((s % 4) + 4) % 4;
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw std::invalid_argument("pauli_mul: length mismatch");
  PauliString r(p.n, p.x ^ q.x, p.z ^ q.z);
  r.phase = uint8_t((pauli_phase_exponent(p, q) + p.phase + q.phase) & 3);
  return r;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(n + 1);
  s.push_back(neg() ? '-' : '+');
  for (uint32_t q = 0; q < n; q++) s.push_back(letter(q));
  return s;
}

PauliString PauliString::parse(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    i++;
  }
  PauliString p(uint32_t(text.size() - i));
  p.set_sign(negative);
  for (uint32_t q = 0; i < text.size(); i++, q++) p.set_letter(q, text[i]);
  return p;
}

PauliString PauliString::permuted(const std::vector<uint32_t>& perm) const {
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  PauliString r(n);
  r.phase = phase;
  for (uint32_t q = 0; q < n; q++) {
    r.set_x(perm[q], x_bit(q));
    r.set_z(perm[q], z_bit(q));
  }
  return r;
}

}  // namespace cc832
