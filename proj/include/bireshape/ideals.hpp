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

#include "bireshape/bipoly.hpp"
#include "bireshape/polymat.hpp"

namespace bireshape {

struct Point {
  Fe alpha;
  Fe beta;
  friend bool operator==(const Point&, const Point&) = default;
};

// Finite set of pairwise distinct points in the plane.
class PointSet {
 public:
  PointSet() = default;
  // Throws DistinctnessError on a repeated point.
  PointSet(const Field& f, std::vector<Point> pts);

  const Field& field() const { return field_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<Point>& points() const { return pts_; }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  std::vector<Fe> alphas() const;
  std::vector<Fe> betas() const;

 private:
  Field field_;
  std::vector<Point> pts_;
};

int x_valency(const PointSet& P);
int y_valency(const PointSet& P);

// Lex (x < y) Groebner basis sorted by increasing y-degree.
struct LexGB {
  std::vector<BiPoly> elements;
  bool minimal = false;
  bool reduced = false;
};

LexGB vanishing_gb(const PointSet& P);
// Rows phi_delta(y^j b_i), 0 <= j < d_{i+1} - d_i, in increasing y-degree.
PolyMatrix gamma_module_basis(const LexGB& G, int delta);
// G = {M, y - (A rem M)} with M made monic, and its delta-basis.
std::pair<LexGB, PolyMatrix> modcomp_basis(const UniPoly& M, const UniPoly& A,
                                           int delta);

// Popov bases of the delta-bases of <M, y - A> for delta = 1 .. delta_max,
// each obtained from the previous one by adjoining y^delta reduced modulo it.
std::vector<PolyMatrix> modcomp_popov_chain(const UniPoly& M, const UniPoly& A,
                                            int delta_max);

// s-weak Popov basis of {f in Gamma(P) : deg_y f < m} by inserting the
// points one at a time.
PolyMatrix point_insertion_basis(const PointSet& P, int m, const Shift& s);
// Popov basis of {f in Gamma(P) : deg_y f < delta}.
PolyMatrix gamma_popov_points(const PointSet& P, int delta);

bool vanishes_on(const BiPoly& f, const PointSet& P);
// Every element monic and no term of one divisible by another's leading term.
bool is_reduced_gb(const std::vector<BiPoly>& G, std::string* why = nullptr);

std::string format_points(const PointSet& P);
PointSet read_points(const Field& f, std::istream& in);
std::string format_gb(const LexGB& G);
LexGB read_gb(const Field& f, std::istream& in);

}  // namespace bireshape
