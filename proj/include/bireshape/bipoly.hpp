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

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "bireshape/upoly.hpp"

namespace bireshape {

// Bivariate polynomial stored dense in y; entry j is the coefficient of y^j
// as a polynomial in x. The top entry is never zero.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Field& f) : field_(f) {}
  BiPoly(const Field& f, std::vector<UniPoly> ycoeffs);

  static BiPoly from_uni(const UniPoly& u);
  // c * x^i * y^j
  static BiPoly monomial(const Field& f, Fe c, int i, int j);

  const Field& field() const { return field_; }
  const std::vector<UniPoly>& ycoeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int deg_y() const {
    return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
  }
  int deg_x() const;
  UniPoly coeff(int j) const;
  Fe term(int i, int j) const;
  // Leading coefficient with respect to y.
  UniPoly lc_y() const { return c_.empty() ? UniPoly(field_) : c_.back(); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.field_ == b.field_);
  }

 private:
  void normalize();

  Field field_;
  std::vector<UniPoly> c_;
};

BiPoly operator+(const BiPoly& f, const BiPoly& g);
BiPoly operator-(const BiPoly& f, const BiPoly& g);
BiPoly operator*(const BiPoly& f, const BiPoly& g);
// f * y^k
BiPoly mul_y_power(const BiPoly& f, int k);
// Multiplies every y-coefficient by u.
BiPoly mul_uni(const BiPoly& f, const UniPoly& u);
// Reduces every y-coefficient modulo m.
BiPoly rem_x(const BiPoly& f, const UniPoly& m);

BiPoly bi_mul(const BiPoly& f, const BiPoly& g);
// (f1, f0) with f = f1 * y^eta + f0 and deg_y f0 < eta.
std::pair<BiPoly, BiPoly> y_split(const BiPoly& f, int eta);
// f(a x + b y, y)
BiPoly shear_poly(const BiPoly& f, Fe a, Fe b);
// f(y, x)
BiPoly transpose(const BiPoly& f);
Fe bi_eval(const BiPoly& f, Fe alpha, Fe beta);

// Normal form of f modulo a minimal lex (x < y) Groebner basis sorted by
// increasing y-degree, with G[0] univariate.
BiPoly rem_gb(const BiPoly& f, const std::vector<BiPoly>& G);
void check_gb_shape(const std::vector<BiPoly>& G);

BiPoly change_field(const BiPoly& f, const Field& target);
// (s1, s2) over the base field with s = s1 + t * s2.
std::pair<BiPoly, BiPoly> split_components(const BiPoly& s);

std::string format_bi(const BiPoly& f);
BiPoly read_bi(const Field& f, std::istream& in);

}  // namespace bireshape
