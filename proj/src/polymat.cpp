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

#include "bireshape/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bireshape/errors.hpp"

namespace bireshape {
namespace {

long long shift_at(const Shift& s, std::size_t j) {
  return s.empty() ? 0 : s[j];
}

// a -= q * b
void row_sub_mul(RowVec& a, const RowVec& b, const UniPoly& q) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (b[j].is_zero()) continue;
    a[j] = a[j] - uni_mul(q, b[j]);
  }
}

void check_shift(const PolyMatrix& B, const Shift& s) {
  if (!s.empty() && s.size() != B.cols()) {
    throw PreconditionError("shift length differs from the column count");
  }
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

PolyMatrix::PolyMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), cols_(cols), m_(rows, RowVec(cols, UniPoly(f))) {}

PolyMatrix::PolyMatrix(const Field& f, std::vector<RowVec> rows)
    : field_(f), cols_(rows.empty() ? 0 : rows[0].size()), m_(std::move(rows)) {
  for (RowVec& r : m_) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix rows");
    for (UniPoly& e : r) {
      if (e.is_zero()) e = UniPoly(f);
    }
  }
}

RowVec phi_map(const BiPoly& f, int delta) {
  if (delta < 0 || f.deg_y() >= delta) {
    throw PreconditionError("phi_map needs deg_y f < delta");
  }
  RowVec v(delta, UniPoly(f.field()));
  for (int j = 0; j <= f.deg_y(); ++j) v[j] = f.ycoeffs()[j];
  return v;
}

BiPoly phi_inv(const Field& f, const RowVec& v) { return BiPoly(f, v); }

int pivot_index(const RowVec& v, const Shift& s) {
  int best = -1;
  long long best_deg = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    long long d = v[j].deg() + shift_at(s, j);
    if (best < 0 || d >= best_deg) {
      best = static_cast<int>(j);
      best_deg = d;
    }
  }
  return best;
}

void row_axpy(RowVec& a, const RowVec& b, Fe c, int e) {
  row_sub_mul(a, b, UniPoly::monomial(b.empty() ? Field() : b[0].field(), c, e));
}

void weak_popov_inplace(PolyMatrix& B, const Shift& s) {
  check_shift(B, s);
  std::vector<int> owner(B.cols(), -1);
  std::vector<std::size_t> todo(B.rows());
  std::iota(todo.rbegin(), todo.rend(), 0);
  while (!todo.empty()) {
    std::size_t r = todo.back();
    todo.pop_back();
    for (;;) {
      int p = pivot_index(B.row(r), s);
      if (p < 0) throw RankDeficiencyError("matrix is rank deficient");
      int o = owner[p];
      if (o < 0) {
        owner[p] = static_cast<int>(r);
        break;
      }
      const UniPoly& ar = B(r, p);
      const UniPoly& ao = B(o, p);
      if (ar.deg() >= ao.deg()) {
        UniPoly q = uni_quo(ar, ao);
        row_sub_mul(B.row(r), B.row(o), q);
      } else {
        UniPoly q = uni_quo(ao, ar);
        row_sub_mul(B.row(o), B.row(r), q);
        owner[p] = static_cast<int>(r);
        todo.push_back(static_cast<std::size_t>(o));
        break;
      }
    }
  }
}

void normalize_popov_inplace(PolyMatrix& B, const Shift& s) {
  check_shift(B, s);
  const std::size_t n = B.rows();
  if (n != B.cols()) throw PreconditionError("Popov normalization needs a square matrix");
  const Field& fld = B.field();
  std::vector<int> piv(n);
  std::vector<int> row_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    piv[i] = pivot_index(B.row(i), s);
    if (piv[i] < 0) throw RankDeficiencyError("zero row");
    if (row_of[piv[i]] >= 0) throw PreconditionError("input is not in weak Popov form");
    row_of[piv[i]] = static_cast<int>(i);
    Fe inv = fld.inv(B(i, piv[i]).lc());
    for (UniPoly& e : B.row(i)) e = scale(e, inv);
  }
  std::vector<int> pdeg(n);
  for (std::size_t j = 0; j < n; ++j) pdeg[j] = B(row_of[j], j).deg();
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      int best = -1;
      long long best_key = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (static_cast<int>(j) == piv[i]) continue;
        int d = B(i, j).deg();
        if (d < pdeg[j]) continue;
        long long key = d + shift_at(s, j);
        if (best < 0 || key >= best_key) {
          best = static_cast<int>(j);
          best_key = key;
        }
      }
      if (best < 0) break;
      UniPoly q = uni_quo(B(i, best), B(row_of[best], best));
      row_sub_mul(B.row(i), B.row(row_of[best]), q);
    }
  }
  std::vector<RowVec> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[piv[i]] = std::move(B.row(i));
  B = PolyMatrix(fld, std::move(sorted));
}

PopovCert certificate(const PolyMatrix& P, const Shift& s) {
  PopovCert c;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    int p = pivot_index(P.row(i), s);
    c.pivots.push_back(p);
    int d = p < 0 ? kMinusInfinity : P(i, p).deg();
    c.row_degrees.push_back(d);
    c.degdet += p < 0 ? 0 : d;
  }
  return c;
}

std::pair<PolyMatrix, PopovCert> popov_form(const PolyMatrix& B, const Shift& s) {
  if (B.rows() != B.cols()) throw PreconditionError("popov_form needs a square matrix");
  PolyMatrix P = B;
  weak_popov_inplace(P, s);
  normalize_popov_inplace(P, s);
  PopovCert cert = certificate(P, s);
  return {std::move(P), std::move(cert)};
}

bool is_popov(const PolyMatrix& P, const Shift& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (P.rows() != P.cols()) return fail("not square");
  if (!s.empty() && s.size() != P.cols()) return fail("shift length mismatch");
  const Field& fld = P.field();
  for (std::size_t i = 0; i < P.rows(); ++i) {
    if (pivot_index(P.row(i), s) != static_cast<int>(i)) {
      return fail("row " + std::to_string(i) + " has its pivot off the diagonal");
    }
    if (!(P(i, i).lc() == fld.one())) {
      return fail("pivot " + std::to_string(i) + " is not monic");
    }
    for (std::size_t k = 0; k < P.rows(); ++k) {
      if (k != i && P(k, i).deg() >= P(i, i).deg()) {
        return fail("column " + std::to_string(i) + " is not pivot-dominated");
      }
    }
  }
  return true;
}

RowVec rem_popov_reduce(const RowVec& v, const PolyMatrix& P) {
  RowVec u = v;
  const std::size_t n = P.rows();
  for (;;) {
    int best = -1;
    int best_deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      int d = u[j].deg();
      if (d < P(j, j).deg()) continue;
      if (best < 0 || d >= best_deg) {
        best = static_cast<int>(j);
        best_deg = d;
      }
    }
    if (best < 0) break;
    UniPoly q = uni_quo(u[best], P(best, best));
    row_sub_mul(u, P.row(best), q);
  }
  return u;
}

namespace {

using Mat = std::vector<RowVec>;

UniPoly shift_down(const UniPoly& f, int k) {
  if (static_cast<int>(f.size()) <= k) return UniPoly(f.field());
  return UniPoly(f.field(), std::vector<Fe>(f.coeffs().begin() + k, f.coeffs().end()));
}

// (a * b) mod x^k for row vector a and square b.
RowVec vec_mat_trunc(const RowVec& a, const Mat& b, int k) {
  const std::size_t m = b.size();
  RowVec out(m, UniPoly(b[0][0].field()));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[i][j].is_zero()) continue;
      out[j] = out[j] + truncate(uni_mul(truncate(a[i], k), truncate(b[i][j], k)), k);
    }
  }
  return out;
}

Mat mat_mat_trunc(const Mat& a, const Mat& b, int k) {
  Mat out;
  for (const RowVec& r : a) out.push_back(vec_mat_trunc(r, b, k));
  return out;
}

// a^{-1} mod x^k for a(0) = I, by Newton iteration.
Mat inverse_identity_series(const Mat& a, int k) {
  const std::size_t m = a.size();
  const Field& f = a[0][0].field();
  Mat x(m, RowVec(m, UniPoly(f)));
  for (std::size_t i = 0; i < m; ++i) x[i][i] = UniPoly::constant(f, f.one());
  for (int prec = 1; prec < k;) {
    prec = std::min(2 * prec, k);
    // x <- x + x (I - a x)
    Mat e = mat_mat_trunc(a, x, prec);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) e[i][j] = -e[i][j];
      e[i][i] = e[i][i] + UniPoly::constant(f, f.one());
    }
    Mat xe = mat_mat_trunc(x, e, prec);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) x[i][j] = x[i][j] + xe[i][j];
  }
  return x;
}

}  // namespace

// With d_j the pivot degrees, P_rev = P(1/x) diag(x^{d_j}) has P_rev(0) = I
// and the reversed quotient is v_rev P_rev^{-1} mod x^{e+1}; it is lifted in
// chunks of max d_j coefficients.
RowVec rem_popov_unchecked(const RowVec& v, const PolyMatrix& P) {
  const std::size_t m = P.rows();
  if (m == 0) return v;
  const Field& f = P.field();
  std::vector<int> d(m);
  int dmin = 0, dmax = 0, vdeg = kMinusInfinity;
  bool reduced = true;
  for (std::size_t j = 0; j < m; ++j) {
    d[j] = P(j, j).deg();
    dmin = j ? std::min(dmin, d[j]) : d[j];
    dmax = std::max(dmax, d[j]);
    vdeg = std::max(vdeg, v[j].deg());
    reduced = reduced && v[j].deg() < d[j];
  }
  if (reduced) return v;
  const int e = vdeg - dmin;
  const int prec = e + 1;
  Mat prev(m, RowVec(m, UniPoly(f)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!P(i, j).is_zero()) prev[i][j] = reversed(P(i, j), d[j] + 1);
  RowVec r(m, UniPoly(f));
  for (std::size_t j = 0; j < m; ++j)
    if (!v[j].is_zero()) r[j] = truncate(reversed(v[j], d[j] + e + 1), prec);
  const int t = std::max(1, dmax);
  const Mat xinv = inverse_identity_series(prev, std::min(t, prec));
  RowVec qrev(m, UniPoly(f));
  for (int c = 0; c < prec; c += t) {
    const int k = std::min(t, prec - c);
    RowVec y = vec_mat_trunc(r, xinv, k);
    for (std::size_t i = 0; i < m; ++i) qrev[i] = qrev[i] + shift_up(y[i], c);
    if (c + k >= prec) break;
    // r <- (r - y P_rev) / x^k, kept to the remaining precision.
    const int rest = prec - c - k;
    for (std::size_t i = 0; i < m; ++i) {
      if (y[i].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (prev[i][j].is_zero()) continue;
        r[j] = r[j] - truncate(uni_mul(y[i], prev[i][j]), k + rest);
      }
    }
    for (std::size_t j = 0; j < m; ++j) r[j] = truncate(shift_down(r[j], k), rest);
  }
  RowVec u = v;
  for (std::size_t i = 0; i < m; ++i) {
    if (qrev[i].is_zero()) continue;
    row_sub_mul(u, P.row(i), reversed(qrev[i], e + 1));
  }
  for (std::size_t j = 0; j < m; ++j)
    if (u[j].deg() >= d[j]) throw Error("internal check failed: remainder not reduced");
  return u;
}

RowVec rem_popov(const RowVec& v, const PolyMatrix& P) {
  std::string why;
  if (!is_popov(P, {}, &why)) throw PreconditionError("not a Popov basis: " + why);
  if (v.size() != P.cols()) throw PreconditionError("vector length mismatch");
  return rem_popov_unchecked(v, P);
}

long long degdet_check(const PolyMatrix& B) {
  if (B.rows() != B.cols()) throw PreconditionError("degdet needs a square matrix");
  PolyMatrix W = B;
  try {
    weak_popov_inplace(W, {});
  } catch (const RankDeficiencyError&) {
    return kMinusInfinity;
  }
  return certificate(W).degdet;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("dimension mismatch");
  PolyMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = c(i, j) + uni_mul(a(i, k), b(k, j));
      }
    }
  }
  return c;
}

std::string format_mat(const PolyMatrix& m) {
  std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const RowVec& r : m.data()) {
    for (const UniPoly& e : r) s += format_uni(e) + "\n";
  }
  return s;
}

PolyMatrix read_mat(const Field& f, std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing matrix header");
  std::istringstream hs(line);
  long long r, c;
  if (!(hs >> r >> c) || r < 0 || c < 0) throw ParseError("bad matrix header '" + line + "'");
  std::vector<RowVec> rows(r);
  for (auto& row : rows) {
    for (long long j = 0; j < c; ++j) {
      if (!next_line(in, line)) throw ParseError("truncated matrix");
      row.push_back(parse_uni(f, line));
    }
  }
  PolyMatrix m(f, std::move(rows));
  if (r == 0) return PolyMatrix(f, 0, static_cast<std::size_t>(c));
  return m;
}

}  // namespace bireshape
