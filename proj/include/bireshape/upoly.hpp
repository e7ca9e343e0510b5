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

#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bireshape/ff.hpp"

namespace bireshape {

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

// Products whose operands both exceed this length use Karatsuba or NTT.
inline constexpr std::size_t kSchoolbookCutoff = 32;
// Multi-point evaluation falls back to Horner at or below this many points.
inline constexpr std::size_t kHornerCutoff = 32;

// Dense univariate polynomial; coefficient i multiplies x^i. The
// coefficient vector never has a trailing zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Field& f) : field_(f) {}
  UniPoly(const Field& f, std::vector<Fe> coeffs);

  static UniPoly constant(const Field& f, Fe c);
  static UniPoly monomial(const Field& f, Fe c, int k);
  // x - a
  static UniPoly linear_root(const Field& f, Fe a);

  const Field& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  int deg() const {
    return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
  }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{}; }
  Fe lc() const { return c_.empty() ? Fe{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.field_ == b.field_);
  }

 private:
  void normalize();

  Field field_;
  std::vector<Fe> c_;
};

UniPoly operator+(const UniPoly& f, const UniPoly& g);
UniPoly operator-(const UniPoly& f, const UniPoly& g);
UniPoly operator-(const UniPoly& f);
UniPoly operator*(const UniPoly& f, const UniPoly& g);
UniPoly scale(const UniPoly& f, Fe c);
// f * x^k
UniPoly shift_up(const UniPoly& f, int k);
// f mod x^k
UniPoly truncate(const UniPoly& f, int k);
UniPoly make_monic(const UniPoly& f);
UniPoly derivative(const UniPoly& f);
// Coefficient-reversed polynomial of length n.
UniPoly reversed(const UniPoly& f, int n);
// Embed into an extension of the same prime, or project back to the base.
UniPoly change_field(const UniPoly& f, const Field& target);

UniPoly uni_mul(const UniPoly& f, const UniPoly& g);
UniPoly mul_schoolbook(const UniPoly& f, const UniPoly& g);
UniPoly mul_karatsuba(const UniPoly& f, const UniPoly& g);

std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& f, const UniPoly& g);
UniPoly uni_rem(const UniPoly& f, const UniPoly& g);
UniPoly uni_quo(const UniPoly& f, const UniPoly& g);
// Inverse of f modulo x^k; f(0) must be nonzero.
UniPoly inverse_series(const UniPoly& f, int k);
UniPoly uni_gcd(UniPoly f, UniPoly g);

Fe horner(const UniPoly& f, Fe a);
std::vector<Fe> uni_mpe(const UniPoly& f, const std::vector<Fe>& pts);
UniPoly uni_interp(const Field& f, const std::vector<std::pair<Fe, Fe>>& pts);
UniPoly uni_interp(const Field& f, const std::vector<Fe>& xs,
                   const std::vector<Fe>& ys);

// h(a z + b)
UniPoly taylor_shift(const UniPoly& h, Fe a, Fe b);

// Product tree over x - alpha_i, used for repeated evaluation and
// interpolation at the same points.
class SubproductTree {
 public:
  SubproductTree() = default;
  // With for_interpolation set, the barycentric weights are computed up
  // front and repeated points raise DistinctnessError.
  SubproductTree(const Field& f, std::vector<Fe> points,
                 bool for_interpolation = false);

  const Field& field() const { return field_; }
  const std::vector<Fe>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  const UniPoly& root() const { return levels_.back()[0]; }
  const std::vector<std::vector<UniPoly>>& levels() const { return levels_; }

  std::vector<Fe> evaluate(const UniPoly& f) const;
  // Requires construction with for_interpolation.
  UniPoly interpolate(const std::vector<Fe>& values) const;

 private:
  void eval_rec(const UniPoly& f, std::size_t level, std::size_t idx,
                std::vector<Fe>& out) const;
  UniPoly node_rem(const UniPoly& f, std::size_t level, std::size_t idx) const;
  UniPoly comb_rec(const std::vector<Fe>& w, std::size_t level,
                   std::size_t idx) const;

  Field field_;
  std::vector<Fe> pts_;
  // levels_[0] holds the leaves x - alpha_i; the last level is the root.
  std::vector<std::vector<UniPoly>> levels_;
  // Series inverse of each reversed node, to the precision its divisions
  // need; empty for nodes too small to benefit.
  std::vector<std::vector<UniPoly>> inv_rev_;
  std::vector<Fe> inv_weights_;
};

std::string format_uni(const UniPoly& f);
UniPoly parse_uni(const Field& f, const std::string& line);

}  // namespace bireshape
