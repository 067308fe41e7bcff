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

#ifndef CC832_ERRORS_HPP
#define CC832_ERRORS_HPP

#include <stdexcept>

namespace cc832 {

// Exceeded a configured cap (search nodes, branch count, ...).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pauli propagation hit a non-Clifford gate; use the state-vector engine.
struct PropagationUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A qubit permutation that does not fix the stabilizer group.
struct NotASymmetryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// BFS exhausted the reachable set without meeting the accept predicate.
struct ExhaustionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cc832

#endif
