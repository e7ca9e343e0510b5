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
#include <ostream>
#include <string>
#include <vector>

#include "bireshape/ff.hpp"
#include "bireshape/ideals.hpp"
#include "bireshape/pack.hpp"
#include "bireshape/rng.hpp"

namespace bireshape::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitOnlineInput = 3;
inline constexpr int kExitIo = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Uniform points with pairwise distinct x-coordinates.
PointSet random_distinct_x_points(const Field& F, SplitMix64& rng, std::size_t n);
// Uniform monic square-free polynomial of degree n.
UniPoly random_squarefree(const Field& F, SplitMix64& rng, int n);

// Row degrees predicted for a Popov basis of Gamma_m(P), sorted.
std::vector<int> popov_law_prediction(long long n, int m);

struct StatsConfig {
  std::string mode = "points";  // points | modcomp
  long long n = 64;
  u64 p = 2013265921;
  int d = 0;  // sequence start; 0 means n
  int m = 8;  // module rank for the row-degree law
  int trials = 100;
  u64 seed = 1;
  int threads = 0;  // 0 means hardware concurrency
};

struct TrialResult {
  bool failed = false;  // reshaper computation failed
  std::string failure;
  bool balanced = false;
  std::vector<long long> slacks;
  BalanceVerdict verdict;
  bool popov_checked = false;
  bool popov_law = false;
  std::vector<int> popov_degrees;  // sorted
};

struct StatsResult {
  std::vector<TrialResult> trials;
  int balanced_count() const;
  int popov_count() const;
  int popov_checked_count() const;
};

StatsResult balance_stats(const StatsConfig& cfg);
void print_stats(const StatsConfig& cfg, const StatsResult& res, std::ostream& out);

struct BenchRow {
  long long n = 0;
  int d = 0;
  double precompute_s = 0;
  double online_s = 0;  // mean per online call
  int online_calls = 0;
  std::string digest;
  bool balanced = false;
};

std::vector<BenchRow> bench(Task task, const std::vector<long long>& sizes, u64 seed,
                            u64 p, double min_online_s = 0.2);
void print_bench(Task task, const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace bireshape::cli
