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
#include <string>
#include <utility>
#include <vector>

#include "bireshape/bipoly.hpp"
#include "bireshape/ideals.hpp"
#include "bireshape/polymat.hpp"

namespace bireshape {

// eta_0 > ... > eta_k with eta_i >= floor(2 eta_{i-1} / 3).
class ReshapingSequence {
 public:
  ReshapingSequence() = default;
  // Throws PreconditionError unless the sequence is valid.
  explicit ReshapingSequence(std::vector<int> eta);

  static bool is_valid(const std::vector<int>& eta, std::string* why = nullptr);

  const std::vector<int>& eta() const { return eta_; }
  bool empty() const { return eta_.empty(); }
  // Number of steps.
  int k() const { return eta_.empty() ? 0 : static_cast<int>(eta_.size()) - 1; }
  int operator[](int i) const { return eta_[i]; }
  int front() const { return eta_.front(); }
  int back() const { return eta_.back(); }
  // 2 eta_i - eta_{i-1} + 1 for 1 <= i <= k.
  int delta(int i) const { return 2 * eta_[i] - eta_[i - 1] + 1; }
  int min_delta() const;
  // Entries eta_from .. eta_to inclusive.
  ReshapingSequence slice(int from, int to) const;

  friend bool operator==(const ReshapingSequence&, const ReshapingSequence&) = default;

 private:
  std::vector<int> eta_;
};

// Greedy (a, b)-sequence with every step budget at least `valency`.
ReshapingSequence make_sequence(int a, int b, int valency);
// Sequence a -> mid -> b and the index of mid.
std::pair<ReshapingSequence, int> make_sequence_through(int a, int mid, int b,
                                                        int valency);

// g_1..g_k with g_i = y^{eta_i} + tail_i and deg_y tail_i < delta_i.
struct Reshaper {
  ReshapingSequence seq;
  std::vector<BiPoly> g;

  // g_i - y^{eta_i}, 1-based.
  BiPoly tail(int i) const;
  int degx(int i) const;
  long long total_degx() const;
};

// Checks the shape of g against seq; throws PreconditionError.
void check_reshaper_shape(const Reshaper& r);

BiPoly reshape(const BiPoly& f, const Reshaper& r);
BiPoly reshape(const BiPoly& f, const ReshapingSequence& seq,
               const std::vector<BiPoly>& g);

// y^eta - ghat in <G> with deg_y ghat < delta and deg_x ghat minimal, or
// nullopt when y^eta + <G> has no element of y-degree below delta.
std::optional<BiPoly> compute_reshaper(const LexGB& G, int eta, int delta);
// Same with R = y^eta rem G and the Popov basis of I_delta supplied.
std::optional<BiPoly> compute_reshaper(const BiPoly& R, const PolyMatrix& popov,
                                       int eta, int delta);

struct BalanceStep {
  int eta = 0;
  int delta = 0;
  int degx = 0;
  long long bound = 0;  // floor(n / delta) + 1
  long long slack = 0;  // bound - degx
};

struct BalanceReport {
  long long n = 0;
  std::vector<BalanceStep> steps;
  bool balanced = true;
};

struct BalanceVerdict {
  bool balanced = true;
  long long aggregate = 0;  // sum eta_i deg_x g_i
  long long bound = 0;      // (3n + eta_1) k
};

BalanceReport balance_report(const Reshaper& r, long long n);
BalanceVerdict check_balanced(const BalanceReport& report);

struct ReshaperBuild {
  Reshaper reshaper;
  BalanceReport report;
};

// Reshaper for Gamma(P); throws ReshaperFailure on a failing step.
ReshaperBuild build_reshaper_pack(const PointSet& P, const ReshapingSequence& seq);
// Reshaper for <M, y - A>.
ReshaperBuild build_reshaper_pack(const UniPoly& M, const UniPoly& A,
                                  const ReshapingSequence& seq);

// A^e rem M by square-and-multiply.
UniPoly powmod(const UniPoly& A, long long e, const UniPoly& M);

}  // namespace bireshape
