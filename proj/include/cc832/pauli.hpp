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

#ifndef CC832_PAULI_HPP
#define CC832_PAULI_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cc832 {

// An n-qubit Pauli operator.  Qubit q has letter
//   I (x=0,z=0), X (1,0), Z (0,1), Y (1,1)
// where the (1,1) letter stands for Y = iXZ.  A global phase i^phase is
// tracked internally so that multiplication is exactly associative; the
// public interface renders only the real sign (i and -i fold to + and -,
// which only arises for products of anticommuting operators).  All
// operators that must carry an exact sign (stabilizer rows, propagated
// errors) stay at even phase, where the rendering is exact.
//
// Bit packing covers up to 64 qubits; row operations are single-word XORs.
struct PauliString {
  uint32_t n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  uint8_t phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  explicit PauliString(uint32_t n_qubits) : n(n_qubits) { check_size(n_qubits); }
  PauliString(uint32_t n_qubits, uint64_t x_bits, uint64_t z_bits, bool negative = false)
      : n(n_qubits), x(x_bits), z(z_bits), phase(negative ? 2 : 0) {
    check_size(n_qubits);
  }

  static void check_size(uint32_t n_qubits) {
    if (n_qubits > 64) throw std::invalid_argument("PauliString supports at most 64 qubits");
  }

  uint64_t mask() const { return n == 64 ? ~0ull : ((1ull << n) - 1); }

  static PauliString identity(uint32_t n) { return PauliString(n); }

  // Single-qubit letter constructor, e.g. PauliString::single(8, 'X', 3).
  static PauliString single(uint32_t n, char letter, uint32_t qubit);

  // Pauli with the given letter on every qubit of `support`.
  static PauliString on_support(uint32_t n, char letter, const std::vector<uint32_t>& support);

  bool is_identity() const { return x == 0 && z == 0; }

  uint32_t weight() const { return uint32_t(std::popcount(x | z)); }

  bool x_bit(uint32_t q) const { return (x >> q) & 1; }
  bool z_bit(uint32_t q) const { return (z >> q) & 1; }

  void set_x(uint32_t q, bool v) { x = (x & ~(1ull << q)) | (uint64_t(v) << q); }
  void set_z(uint32_t q, bool v) { z = (z & ~(1ull << q)) | (uint64_t(v) << q); }

  // Real sign: i and -i render as + and - respectively.
  bool neg() const { return phase >= 2; }
  void set_sign(bool negative) { phase = negative ? 2 : 0; }
  void clear_phase() { phase = 0; }
  void flip_sign() { phase = uint8_t((phase + 2) & 3); }

  char letter(uint32_t q) const {
    int k = int(x_bit(q)) | (int(z_bit(q)) << 1);
    return "IXZY"[k];
  }

  void set_letter(uint32_t q, char letter);

  bool commutes_with(const PauliString& other) const {
    return ((std::popcount(x & other.z) ^ std::popcount(z & other.x)) & 1) == 0;
  }

  bool operator==(const PauliString& o) const {
    return n == o.n && x == o.x && z == o.z && phase == o.phase;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

  PauliString operator*(const PauliString& o) const;

  // Renders as sign followed by letters, leftmost letter = qubit 0,
  // e.g. "+XIZY".  parse() accepts the same format (sign optional).
  std::string str() const;
  static PauliString parse(const std::string& text);

  // Applies a qubit relabeling: letter at qubit q moves to perm[q].
  PauliString permuted(const std::vector<uint32_t>& perm) const;
};

// p*q with exact internal phase tracking.  Throws on length mismatch.
PauliString pauli_mul(const PauliString& p, const PauliString& q);

inline PauliString PauliString::operator*(const PauliString& o) const { return pauli_mul(*this, o); }

inline bool commutes(const PauliString& p, const PauliString& q) { return p.commutes_with(q); }

// Exponent of i (mod 4) accumulated when multiplying the letter parts of
// p and q, with letters represented as i^(x&z) X^x Z^z.
int pauli_phase_exponent(const PauliString& p, const PauliString& q);

}  // namespace cc832

#endif
