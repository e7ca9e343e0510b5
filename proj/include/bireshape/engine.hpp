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

#include <memory>
#include <vector>

#include "bireshape/bipoly.hpp"
#include "bireshape/ideals.hpp"
#include "bireshape/reshape.hpp"
#include "bireshape/upoly.hpp"

namespace bireshape {

enum class MpeVariant { kDistinct, kShear };

struct MpePlan {
  MpeVariant variant = MpeVariant::kDistinct;
  int d = 1;
  // Input points over the base field.
  PointSet points;
  // Points the reshaper was built for: the input points, or their shear
  // (alpha + t beta, beta) over the quadratic extension.
  PointSet work;
  Reshaper reshaper;
  BalanceReport report;
  std::shared_ptr<const SubproductTree> tree;

  const Field& field() const { return work.field(); }
};

struct InterpPlan {
  int d = 1;
  int k1 = 0;
  PointSet points;
  // Field of the sheared set; equal to the base field when theta = 0.
  Field ext;
  Fe theta{};
  // (alpha_i, theta alpha_i + beta_i)
  PointSet sheared;
  Reshaper first;   // for the sheared set over ext
  Reshaper second;  // for the input set
  BalanceReport first_report;
  BalanceReport second_report;
  std::shared_ptr<const SubproductTree> tree;  // over theta alpha_i + beta_i

  ReshapingSequence sequence() const;
  // floor(sqrt n) + sum of deg_x over both reshapers.
  long long degx_bound() const;
};

struct ModCompPlan {
  int d = 1;
  UniPoly M;  // monic
  UniPoly A;  // reduced mod M
  Reshaper reshaper;
  BalanceReport report;
};

long long isqrt(long long n);

// Plans built from their parts, as stored in a pack.
MpePlan make_mpe_plan(MpeVariant variant, const PointSet& points, int d,
                      Reshaper reshaper);
InterpPlan make_interp_plan(const PointSet& points, int d, int k1,
                            Reshaper first, Reshaper second);
ModCompPlan make_modcomp_plan(const UniPoly& M, const UniPoly& A, int d,
                              Reshaper reshaper);

// Shear of P over the quadratic extension of its field.
PointSet shear_points(const PointSet& P, const Field& ext);

MpePlan mpe_distinct_precompute(const PointSet& P, int d);
std::vector<Fe> mpe_distinct_online(const MpePlan& plan, const BiPoly& f);

MpePlan mpe_shear_precompute(const PointSet& P, int d);
// Evaluations over the extension, before projection.
std::vector<Fe> mpe_shear_online_raw(const MpePlan& plan, const BiPoly& f);
std::vector<Fe> mpe_shear_online(const MpePlan& plan, const BiPoly& f);

// Dispatches on plan.variant.
std::vector<Fe> mpe_online(const MpePlan& plan, const BiPoly& f);

InterpPlan interpolate_precompute(const PointSet& P, int d);
BiPoly interpolate_online(const InterpPlan& plan, const std::vector<Fe>& gamma);

ModCompPlan modcomp_precompute(const UniPoly& M, const UniPoly& A, int d);
UniPoly modcomp_online(const ModCompPlan& plan, const BiPoly& f);

}  // namespace bireshape
