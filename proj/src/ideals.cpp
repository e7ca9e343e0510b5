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

#include "bireshape/ideals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bireshape/errors.hpp"

namespace bireshape {
namespace {

auto key(Fe a) { return std::pair{a.a0, a.a1}; }

int max_multiplicity(const std::vector<Fe>& v) {
  std::map<std::pair<u64, u64>, int> count;
  int best = 0;
  for (const Fe& a : v) best = std::max(best, ++count[key(a)]);
  return best;
}

Fe eval_row(const Field& f, const RowVec& row, Fe alpha,
            const std::vector<Fe>& beta_pow) {
  Fe acc{};
  for (std::size_t l = 0; l < row.size(); ++l) {
    if (row[l].is_zero()) continue;
    acc = f.add(acc, f.mul(horner(row[l], alpha), beta_pow[l]));
  }
  return acc;
}

long long row_key(const RowVec& row, const Shift& s, int* piv) {
  *piv = pivot_index(row, s);
  return row[*piv].deg() + (s.empty() ? 0 : s[*piv]);
}

// Minimal-degree lower-triangular rows -> reduced lex basis.
LexGB from_hermite(const PolyMatrix& H) {
  LexGB G;
  int best = -1;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    int d = H(i, i).deg();
    if (best >= 0 && d >= best) continue;
    G.elements.push_back(phi_inv(H.field(), H.row(i)));
    best = d;
    if (d == 0) break;
  }
  G.minimal = true;
  G.reduced = true;
  return G;
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

PointSet::PointSet(const Field& f, std::vector<Point> pts)
    : field_(f), pts_(std::move(pts)) {
  std::vector<std::pair<std::pair<u64, u64>, std::pair<u64, u64>>> keys;
  keys.reserve(pts_.size());
  for (const Point& p : pts_) {
    if (!f.is_canonical(p.alpha) || !f.is_canonical(p.beta)) {
      throw ContextMismatch("point coordinate outside the field");
    }
    keys.push_back({key(p.alpha), key(p.beta)});
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw DistinctnessError("point set contains a repeated point");
  }
}

std::vector<Fe> PointSet::alphas() const {
  std::vector<Fe> v;
  v.reserve(pts_.size());
  for (const Point& p : pts_) v.push_back(p.alpha);
  return v;
}

std::vector<Fe> PointSet::betas() const {
  std::vector<Fe> v;
  v.reserve(pts_.size());
  for (const Point& p : pts_) v.push_back(p.beta);
  return v;
}

int x_valency(const PointSet& P) { return max_multiplicity(P.alphas()); }
int y_valency(const PointSet& P) { return max_multiplicity(P.betas()); }

PolyMatrix point_insertion_basis(const PointSet& P, int m, const Shift& s) {
  if (m < 1) throw PreconditionError("module rank must be positive");
  const Field& f = P.field();
  std::vector<RowVec> rows(m, RowVec(m, UniPoly(f)));
  for (int i = 0; i < m; ++i) rows[i][i] = UniPoly::constant(f, f.one());
  std::vector<Fe> beta_pow(m);
  std::vector<Fe> res(m);
  for (const Point& pt : P.points()) {
    beta_pow[0] = f.one();
    for (int l = 1; l < m; ++l) beta_pow[l] = f.mul(beta_pow[l - 1], pt.beta);
    int chosen = -1;
    long long chosen_key = 0;
    int chosen_piv = 0;
    for (int i = 0; i < m; ++i) {
      res[i] = eval_row(f, rows[i], pt.alpha, beta_pow);
      if (f.is_zero(res[i])) continue;
      int piv;
      long long k = row_key(rows[i], s, &piv);
      if (chosen < 0 || k < chosen_key || (k == chosen_key && piv < chosen_piv)) {
        chosen = i;
        chosen_key = k;
        chosen_piv = piv;
      }
    }
    if (chosen < 0) continue;
    Fe inv = f.inv(res[chosen]);
    for (int i = 0; i < m; ++i) {
      if (i == chosen || f.is_zero(res[i])) continue;
      row_axpy(rows[i], rows[chosen], f.mul(res[i], inv), 0);
    }
    UniPoly lin = UniPoly::linear_root(f, pt.alpha);
    for (UniPoly& e : rows[chosen]) {
      if (!e.is_zero()) e = uni_mul(e, lin);
    }
  }
  return PolyMatrix(f, std::move(rows));
}

PolyMatrix gamma_popov_points(const PointSet& P, int delta) {
  PolyMatrix W = point_insertion_basis(P, delta, {});
  normalize_popov_inplace(W, {});
  return W;
}

LexGB vanishing_gb(const PointSet& P) {
  if (P.empty()) throw PreconditionError("empty point set");
  const Field& f = P.field();
  const int nux = x_valency(P);
  if (nux == 1) {
    std::vector<Fe> xs = P.alphas();
    SubproductTree tree(f, xs, true);
    UniPoly L = tree.interpolate(P.betas());
    LexGB G;
    G.elements.push_back(BiPoly::from_uni(tree.root()));
    G.elements.push_back(BiPoly(f, {-L, UniPoly::constant(f, f.one())}));
    G.minimal = G.reduced = true;
    return G;
  }
  const int m = nux + 1;
  const long long n = static_cast<long long>(P.size());
  Shift s(m);
  for (int j = 0; j < m; ++j) s[j] = j * n;
  PolyMatrix W = point_insertion_basis(P, m, s);
  normalize_popov_inplace(W, s);
  return from_hermite(W);
}

PolyMatrix gamma_module_basis(const LexGB& G, int delta) {
  if (delta <= 0) throw PreconditionError("delta must be positive");
  check_gb_shape(G.elements);
  const Field& f = G.elements[0].field();
  std::vector<RowVec> rows;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    const int d = G.elements[i].deg_y();
    if (d >= delta) break;
    int next = i + 1 < G.elements.size() ? G.elements[i + 1].deg_y() : delta;
    next = std::min(next, delta);
    for (int j = 0; j < next - d; ++j) {
      rows.push_back(phi_map(mul_y_power(G.elements[i], j), delta));
    }
  }
  if (static_cast<int>(rows.size()) != delta) {
    throw PreconditionError("basis does not span a full-rank module");
  }
  return PolyMatrix(f, std::move(rows));
}

std::pair<LexGB, PolyMatrix> modcomp_basis(const UniPoly& M, const UniPoly& A,
                                           int delta) {
  if (M.deg() < 1) throw PreconditionError("M must have positive degree");
  const Field& f = M.field();
  UniPoly Mm = make_monic(M);
  UniPoly Ar = uni_rem(A, Mm);
  LexGB G;
  G.elements.push_back(BiPoly::from_uni(Mm));
  G.elements.push_back(BiPoly(f, {-Ar, UniPoly::constant(f, f.one())}));
  G.minimal = G.reduced = true;
  PolyMatrix B = gamma_module_basis(G, delta);
  return {std::move(G), std::move(B)};
}

std::vector<PolyMatrix> modcomp_popov_chain(const UniPoly& M, const UniPoly& A,
                                            int delta_max) {
  if (M.deg() < 1) throw PreconditionError("M must have positive degree");
  if (delta_max < 1) throw PreconditionError("delta must be positive");
  const Field& f = M.field();
  const UniPoly Mm = make_monic(M);
  const UniPoly Ar = uni_rem(A, Mm);
  std::vector<PolyMatrix> out;
  out.push_back(PolyMatrix(f, {RowVec{Mm}}));
  UniPoly power = UniPoly::constant(f, f.one());
  for (int d = 1; d < delta_max; ++d) {
    const PolyMatrix& P = out.back();
    power = uni_rem(uni_mul(power, Ar), Mm);
    RowVec r(d, UniPoly(f));
    r[0] = -power;
    RowVec v = rem_popov_unchecked(r, P);
    v.push_back(UniPoly::constant(f, f.one()));
    std::vector<RowVec> rows;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      rows.push_back(P.row(i));
      rows.back().push_back(UniPoly(f));
    }
    rows.push_back(std::move(v));
    out.push_back(popov_form(PolyMatrix(f, std::move(rows))).first);
  }
  return out;
}

bool vanishes_on(const BiPoly& f, const PointSet& P) {
  for (const Point& p : P.points()) {
    if (!P.field().is_zero(bi_eval(f, p.alpha, p.beta))) return false;
  }
  return true;
}

bool is_reduced_gb(const std::vector<BiPoly>& G, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t a = 0; a < G.size(); ++a) {
    if (G[a].is_zero()) return fail("zero element");
    if (!G[a].lc_y().is_monic()) return fail("element " + std::to_string(a) + " not monic");
    for (std::size_t b = 0; b < G.size(); ++b) {
      if (a == b) continue;
      const int ly = G[b].deg_y();
      const int lx = G[b].lc_y().deg();
      for (int j = ly; j <= G[a].deg_y(); ++j) {
        if (G[a].coeff(j).deg() >= lx) {
          return fail("a term of element " + std::to_string(a) +
                      " is divisible by the leading term of element " +
                      std::to_string(b));
        }
      }
    }
  }
  return true;
}

std::string format_points(const PointSet& P) {
  std::string s;
  for (const Point& p : P.points()) {
    s += P.field().format(p.alpha) + " " + P.field().format(p.beta) + "\n";
  }
  return s;
}

PointSet read_points(const Field& f, std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (next_line(in, line)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw ParseError("bad point line '" + line + "'");
    }
    pts.push_back({f.parse(a), f.parse(b)});
  }
  return PointSet(f, std::move(pts));
}

std::string format_gb(const LexGB& G) {
  std::string s = "gb " + std::to_string(G.elements.size()) + "\n";
  for (const BiPoly& b : G.elements) s += format_bi(b);
  return s;
}

LexGB read_gb(const Field& f, std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing 'gb' header");
  std::istringstream hs(line);
  std::string tag;
  long long count;
  if (!(hs >> tag >> count) || tag != "gb" || count < 0) {
    throw ParseError("bad basis header '" + line + "'");
  }
  LexGB G;
  for (long long i = 0; i < count; ++i) G.elements.push_back(read_bi(f, in));
  check_gb_shape(G.elements);
  G.minimal = true;
  G.reduced = is_reduced_gb(G.elements);
  return G;
}

}  // namespace bireshape
