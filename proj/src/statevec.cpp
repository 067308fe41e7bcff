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

#include "cc832/statevec.hpp"

#include <cmath>
#include <stdexcept>

namespace cc832 {

StateVector::StateVector(uint32_t n_qubits) : n_(n_qubits) {
  if (n_qubits > kMaxQubits) throw std::invalid_argument("StateVector: more than 16 qubits");
  amps_.assign(size_t(1) << n_, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

void StateVector::apply_h(uint32_t q) {
  size_t bit = size_t(1) << q;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & bit) continue;
    auto a = amps_[i], b = amps_[i | bit];
    amps_[i] = (a + b) * M_SQRT1_2;
    amps_[i | bit] = (a - b) * M_SQRT1_2;
  }
}

void StateVector::phase_one(uint32_t q, std::complex<double> phase) {
  size_t bit = size_t(1) << q;
  for (size_t i = 0; i < amps_.size(); i++)
    if (i & bit) amps_[i] *= phase;
}

void StateVector::apply_x(uint32_t q) {
  size_t bit = size_t(1) << q;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & bit) continue;
    std::swap(amps_[i], amps_[i | bit]);
  }
}

void StateVector::apply_y(uint32_t q) {
  size_t bit = size_t(1) << q;
  const std::complex<double> im{0.0, 1.0};
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & bit) continue;
    auto a = amps_[i], b = amps_[i | bit];
    amps_[i] = -im * b;
    amps_[i | bit] = im * a;
  }
}

void StateVector::apply_cx(uint32_t c, uint32_t t) {
  if (c == t) throw std::invalid_argument("cx: control equals target");
  size_t cb = size_t(1) << c, tb = size_t(1) << t;
  for (size_t i = 0; i < amps_.size(); i++) {
    if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }
}

void StateVector::apply_cz(uint32_t a, uint32_t b) {
  if (a == b) throw std::invalid_argument("cz: identical qubits");
  size_t m = (size_t(1) << a) | (size_t(1) << b);
  for (size_t i = 0; i < amps_.size(); i++)
    if ((i & m) == m) amps_[i] = -amps_[i];
}

void StateVector::apply_ccz(uint32_t a, uint32_t b, uint32_t c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("ccz: duplicate qubits");
  size_t m = (size_t(1) << a) | (size_t(1) << b) | (size_t(1) << c);
  for (size_t i = 0; i < amps_.size(); i++)
    if ((i & m) == m) amps_[i] = -amps_[i];
}

void StateVector::apply_swap(uint32_t a, uint32_t b) {
  if (a == b) throw std::invalid_argument("swap: identical qubits");
  size_t ab = size_t(1) << a, bb = size_t(1) << b;
  for (size_t i = 0; i < amps_.size(); i++) {
    if ((i & ab) && !(i & bb)) std::swap(amps_[i], amps_[(i & ~ab) | bb]);
  }
}

void StateVector::apply_permutation(const std::vector<uint32_t>& perm) {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::complex<double>> out(amps_.size());
  for (size_t i = 0; i < amps_.size(); i++) {
    size_t j = 0;
    for (uint32_t q = 0; q < n_; q++)
      if (i & (size_t(1) << q)) j |= size_t(1) << perm[q];
    out[j] = amps_[i];
  }
  amps_ = std::move(out);
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n != n_) throw std::invalid_argument("pauli size mismatch");
  // (-1)^neg * i^(|Y support|) * prod Z^z * prod X^x acting by index flip.
  uint64_t mx = p.x, mz = p.z;
  int ys = std::popcount(mx & mz) & 3;
  std::complex<double> base{1.0, 0.0};
  const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  base = ipow[ys];
  if (p.neg()) base = -base;
  std::vector<std::complex<double>> out(amps_.size());
  for (size_t i = 0; i < amps_.size(); i++) {
    // Z part acts on the pre-flip basis state.
    int zpar = std::popcount(uint64_t(i) & mz) & 1;
    std::complex<double> ph = zpar ? -base : base;
    out[i ^ mx] = ph * amps_[i];
  }
  amps_ = std::move(out);
}

void StateVector::apply_gate(const std::string& name, const std::vector<uint32_t>& qubits) {
  for (uint32_t q : qubits)
    if (q >= n_) throw std::invalid_argument("gate qubit out of range");
  auto need = [&](size_t k) {
    if (qubits.size() != k) throw std::invalid_argument("wrong arity for gate " + name);
  };
  if (name == "H") { need(1); apply_h(qubits[0]); }
  else if (name == "S") { need(1); apply_s(qubits[0]); }
  else if (name == "SDG") { need(1); apply_sdg(qubits[0]); }
  else if (name == "T") { need(1); apply_t(qubits[0]); }
  else if (name == "TDG") { need(1); apply_tdg(qubits[0]); }
  else if (name == "X") { need(1); apply_x(qubits[0]); }
  else if (name == "Y") { need(1); apply_y(qubits[0]); }
  else if (name == "Z") { need(1); apply_z(qubits[0]); }
  else if (name == "CX") { need(2); apply_cx(qubits[0], qubits[1]); }
  else if (name == "CZ") { need(2); apply_cz(qubits[0], qubits[1]); }
  else if (name == "CCZ") { need(3); apply_ccz(qubits[0], qubits[1], qubits[2]); }
  else if (name == "SWAP") { need(2); apply_swap(qubits[0], qubits[1]); }
  else throw std::invalid_argument("statevector engine cannot apply gate " + name);
}

double StateVector::prob_one(uint32_t q, char basis) {
  if (basis == 'X') {
    apply_h(q);
    double p = prob_one(q, 'Z');
    apply_h(q);
    return p;
  }
  size_t bit = size_t(1) << q;
  double p = 0.0;
  for (size_t i = 0; i < amps_.size(); i++)
    if (i & bit) p += std::norm(amps_[i]);
  return p;
}

double StateVector::collapse(uint32_t q, char basis, int outcome) {
  if (basis == 'X') {
    apply_h(q);
    double p = collapse(q, 'Z', outcome);
    apply_h(q);
    return p;
  }
  size_t bit = size_t(1) << q;
  double p = 0.0;
  for (size_t i = 0; i < amps_.size(); i++) {
    bool one = (i & bit) != 0;
    if (one == (outcome != 0)) {
      p += std::norm(amps_[i]);
    } else {
      amps_[i] = {0.0, 0.0};
    }
  }
  if (p > 0.0) {
    double s = 1.0 / std::sqrt(p);
    for (auto& a : amps_) a *= s;
  }
  return p;
}

int StateVector::measure_qubit(uint32_t q, char basis, std::optional<int> forced, RngStream& rng) {
  if (q >= n_) throw std::invalid_argument("measure_qubit: index out of range");
  int out;
  if (forced) {
    out = *forced;
  } else {
    double p1 = prob_one(q, basis);
    out = rng.next_double() < p1 ? 1 : 0;
  }
  collapse(q, basis, out);
  return out;
}

void StateVector::reset_qubit(uint32_t q, RngStream& rng) {
  int out = measure_qubit(q, 'Z', std::nullopt, rng);
  if (out) apply_x(q);
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::renormalize() {
  double s = 1.0 / std::sqrt(norm_sq());
  for (auto& a : amps_) a *= s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: size mismatch");
  std::complex<double> ip{0.0, 0.0};
  const auto& av = a.amplitudes();
  const auto& bv = b.amplitudes();
  for (size_t i = 0; i < av.size(); i++) ip += std::conj(av[i]) * bv[i];
  return std::norm(ip);
}

}  // namespace cc832
