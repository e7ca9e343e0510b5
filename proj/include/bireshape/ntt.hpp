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

#include <cstddef>
#include <vector>

#include "bireshape/ff.hpp"

namespace bireshape {

// True if a cyclic transform of length >= len exists in the prime field.
bool ntt_supports(const Field& f, std::size_t len);

// Product of two residue vectors of the prime field via NTT.
std::vector<u64> ntt_multiply(const Field& f, const std::vector<u64>& a,
                              const std::vector<u64>& b);

}  // namespace bireshape
