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

#include "bireshape/oracle.hpp"

#include "bireshape/errors.hpp"

namespace bireshape {

namespace {

using Vec = std::vector<Fe>;

Vec coeffs_of(const UniPoly& u) { return u.coeffs(); }

Fe horner_vec(const Field& F, const Vec& c, Fe a) {
  Fe acc = F.zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, a), c[i]);
  return acc;
}

void trim(const Field& F, Vec& v) {
  while (!v.empty() && F.is_zero(v.back())) v.pop_back();
}

Vec mul_vec(const Field& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  trim(F, out);
  return out;
}

Vec rem_vec(const Field& F, Vec a, const Vec& m) {
  trim(F, a);
  const Fe inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    const Fe q = F.mul(a.back(), inv);
    const std::size_t off = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[off + i] = F.sub(a[off + i], F.mul(q, m[i]));
    a.pop_back();
    trim(F, a);
  }
  return a;
}

Vec add_vec(const Field& F, Vec a, const Vec& b) {
  if (a.size() < b.size()) a.resize(b.size(), F.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  trim(F, a);
  return a;
}

// Solves A c = b by Gauss-Jordan; nullopt if inconsistent.
std::optional<Vec> solve(const Field& F, std::vector<Vec> A, Vec b) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && F.is_zero(A[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    const Fe inv = F.inv(A[r][c]);
    for (auto& x : A[r]) x = F.mul(x, inv);
    b[r] = F.mul(b[r], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(A[i][c])) continue;
      const Fe t = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(t, A[r][j]));
      b[i] = F.sub(b[i], F.mul(t, b[r]));
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!F.is_zero(b[i])) return std::nullopt;
  Vec x(cols, F.zero());
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

}  // namespace

std::vector<Fe> naive_mpe(const BiPoly& f, const PointSet& P) {
  const Field& F = P.field();
  std::vector<Fe> out;
  for (const Point& pt : P.points()) {
    Fe acc = F.zero();
    const auto& ys = f.ycoeffs();
    for (std::size_t j = ys.size(); j-- > 0;)
      acc = F.add(F.mul(acc, pt.beta), horner_vec(F, ys[j].coeffs(), pt.alpha));
    out.push_back(acc);
  }
  return out;
}

UniPoly naive_modcomp(const BiPoly& f, const UniPoly& M, const UniPoly& A) {
  if (M.is_zero()) throw ArithmeticError("naive_modcomp: zero modulus");
  const Field& F = M.field();
  const Vec m = coeffs_of(M), a = coeffs_of(A);
  Vec acc;
  const auto& ys = f.ycoeffs();
  for (std::size_t j = ys.size(); j-- > 0;)
    acc = rem_vec(F, add_vec(F, mul_vec(F, acc, a), ys[j].coeffs()), m);
  return UniPoly(F, acc);
}

std::optional<BiPoly> brute_min_reshaper(const PointSet& P, int eta, int delta,
                                         int degx_cap) {
  const Field& F = P.field();
  Vec rhs;
  for (const Point& pt : P.points()) rhs.push_back(F.pow(pt.beta, eta));
  for (int D = 0; D <= degx_cap; ++D) {
    // Unknown c_{i,j} at column j * (D + 1) + i.
    std::vector<Vec> A;
    for (const Point& pt : P.points()) {
      Vec row;
      Fe yj = F.one();
      for (int j = 0; j < delta; ++j) {
        Fe xi = F.one();
        for (int i = 0; i <= D; ++i) {
          row.push_back(F.mul(xi, yj));
          xi = F.mul(xi, pt.alpha);
        }
        yj = F.mul(yj, pt.beta);
      }
      A.push_back(row);
    }
    auto sol = solve(F, A, rhs);
    if (!sol) continue;
    std::vector<UniPoly> ycoeffs;
    for (int j = 0; j < delta; ++j)
      ycoeffs.emplace_back(F, Vec(sol->begin() + j * (D + 1), sol->begin() + (j + 1) * (D + 1)));
    return BiPoly(F, ycoeffs);
  }
  return std::nullopt;
}

}  // namespace bireshape
