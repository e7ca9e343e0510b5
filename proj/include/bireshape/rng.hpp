// Copyright 2026 The bireshape Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "bireshape/ff.hpp"

namespace bireshape {

// SplitMix64 generator. split(i) derives an independent stream so that
// per-trial randomness does not depend on scheduling.
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
      std::uint64_t r = next();
      if (r < limit) return r % bound;
    }
  }

  // Uniform in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 s(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    s.next();
    return SplitMix64(s.next());
  }

  Fe base_element(const Field& f) { return {below(f.p()), 0}; }
  Fe element(const Field& f) {
    return {below(f.p()), f.is_extension() ? below(f.p()) : 0};
  }

 private:
  std::uint64_t state_;
};

}  // namespace bireshape
