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

#ifndef CC832_RNG_HPP
#define CC832_RNG_HPP

#include <cstdint>

namespace cc832 {

// Counter-based stream: every (seed, stream_id) pair yields an independent,
// reproducible sequence, so per-shot results do not depend on how shots are
// scheduled across threads.
class RngStream {
 public:
  RngStream() : state_(0x9e3779b97f4a7c15ull) {}
  RngStream(uint64_t seed, uint64_t stream_id) {
    state_ = mix(mix(seed ^ 0x2545f4914f6cdd1dull) + stream_id);
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool() { return next_u64() & 1ull; }

  // Uniform in [0, bound).
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t state_;
};

}  // namespace cc832

#endif
