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

#include <optional>
#include <vector>

#include "bireshape/bipoly.hpp"
#include "bireshape/ideals.hpp"

namespace bireshape {

// Brute-force references. They use field arithmetic only and none of the
// polynomial algorithms they are checked against.

// f(alpha, beta) at every point, by nested Horner.
std::vector<Fe> naive_mpe(const BiPoly& f, const PointSet& P);

// f(x, A) rem M by Horner in y with schoolbook products.
UniPoly naive_modcomp(const BiPoly& f, const UniPoly& M, const UniPoly& A);

// ghat with deg_y ghat < delta, deg_x ghat minimal and y^eta - ghat vanishing
// on P, searching deg_x = 0 .. degx_cap. nullopt if none exists in range.
std::optional<BiPoly> brute_min_reshaper(const PointSet& P, int eta, int delta,
                                         int degx_cap);

}  // namespace bireshape
