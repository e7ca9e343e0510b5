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
#include <istream>
#include <string>
#include <variant>

#include "bireshape/engine.hpp"

namespace bireshape {

enum class Task { kMpeDistinct, kMpeShear, kInterpolate, kModComp };

// Which coordinate the pack treats as x. Packs built with yx hold the
// transposed instance; callers swap coordinates on the way in and out.
enum class Orientation { kXY, kYX };

struct Pack {
  Task task = Task::kMpeDistinct;
  Orientation orient = Orientation::kXY;
  std::variant<MpePlan, InterpPlan, ModCompPlan> plan;

  const MpePlan& mpe() const { return std::get<MpePlan>(plan); }
  const InterpPlan& interp() const { return std::get<InterpPlan>(plan); }
  const ModCompPlan& modcomp() const { return std::get<ModCompPlan>(plan); }
  // Base field of the instance.
  const Field& field() const;
  long long n() const;
  int d() const;
  // Balance reports of every reshaper in the pack, in order.
  std::vector<BalanceReport> reports() const;
};

std::string task_name(Task t);
Task parse_task(const std::string& s);

// FNV-1a over the text form of the points.
std::uint64_t points_hash(const PointSet& P);

std::string write_pack(const Pack& pack);
// Rebuilds the plan from the pack contents alone; throws ParseError.
Pack read_pack(std::istream& in);
Pack read_pack_string(const std::string& text);

}  // namespace bireshape
