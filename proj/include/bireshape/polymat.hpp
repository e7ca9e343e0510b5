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
#include "bireshape/upoly.hpp"

namespace bireshape {

using RowVec = std::vector<UniPoly>;
// Column shift; empty means all zeros.
using Shift = std::vector<long long>;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const Field& f, std::size_t rows, std::size_t cols);
  PolyMatrix(const Field& f, std::vector<RowVec> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return m_.size(); }
  std::size_t cols() const { return cols_; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  const RowVec& row(std::size_t i) const { return m_[i]; }
  RowVec& row(std::size_t i) { return m_[i]; }
  const std::vector<RowVec>& data() const { return m_; }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.cols_ == b.cols_ && a.m_ == b.m_;
  }

 private:
  Field field_;
  std::size_t cols_ = 0;
  std::vector<RowVec> m_;
};

struct PopovCert {
  std::vector<int> pivots;       // pivot column of each row
  std::vector<int> row_degrees;  // unshifted degree of each pivot entry
  long long degdet = 0;
};

// f = sum_j f_j y^j  <->  [f_0, ..., f_{delta-1}]
RowVec phi_map(const BiPoly& f, int delta);
BiPoly phi_inv(const Field& f, const RowVec& v);

// Rightmost column attaining max(deg v_j + s_j); -1 for the zero row.
int pivot_index(const RowVec& v, const Shift& s);
// a -= c * x^e * b
void row_axpy(RowVec& a, const RowVec& b, Fe c, int e);

// Mulders-Storjohann reduction to s-weak Popov form, in place.
void weak_popov_inplace(PolyMatrix& B, const Shift& s);
// s-weak Popov -> s-Popov, rows sorted by pivot column.
void normalize_popov_inplace(PolyMatrix& B, const Shift& s);

std::pair<PolyMatrix, PopovCert> popov_form(const PolyMatrix& B,
                                            const Shift& s = {});
bool is_popov(const PolyMatrix& P, const Shift& s = {},
              std::string* why = nullptr);
PopovCert certificate(const PolyMatrix& P, const Shift& s = {});

// The unique u in v + rowspace(P) with cdeg(u) < cdeg(P); P must be in
// (unshifted) Popov form.
RowVec rem_popov(const RowVec& v, const PolyMatrix& P);
// Same, without re-validating P.
RowVec rem_popov_unchecked(const RowVec& v, const PolyMatrix& P);
// Same result by repeated pivot division; slow on unbalanced inputs.
RowVec rem_popov_reduce(const RowVec& v, const PolyMatrix& P);

long long degdet_check(const PolyMatrix& B);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

std::string format_mat(const PolyMatrix& m);
PolyMatrix read_mat(const Field& f, std::istream& in);

}  // namespace bireshape
