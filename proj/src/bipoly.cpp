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

#include "bireshape/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "bireshape/errors.hpp"

namespace bireshape {
namespace {

Field common_field(const BiPoly& f, const BiPoly& g) {
  if (!f.field().valid()) return g.field();
  if (!g.field().valid()) return f.field();
  if (!(f.field() == g.field())) {
    throw ContextMismatch("bivariate polynomials over different fields");
  }
  return f.field();
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

BiPoly::BiPoly(const Field& f, std::vector<UniPoly> ycoeffs)
    : field_(f), c_(std::move(ycoeffs)) {
  for (UniPoly& u : c_) {
    if (u.is_zero()) {
      u = UniPoly(f);
    } else if (!(u.field() == f)) {
      throw ContextMismatch("y-coefficient over a different field");
    }
  }
  normalize();
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_uni(const UniPoly& u) {
  return BiPoly(u.field(), {u});
}

BiPoly BiPoly::monomial(const Field& f, Fe c, int i, int j) {
  std::vector<UniPoly> v(j + 1, UniPoly(f));
  v[j] = UniPoly::monomial(f, c, i);
  return BiPoly(f, std::move(v));
}

int BiPoly::deg_x() const {
  int d = kMinusInfinity;
  for (const UniPoly& u : c_) d = std::max(d, u.deg());
  return d;
}

UniPoly BiPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return UniPoly(field_);
  return c_[j];
}

Fe BiPoly::term(int i, int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return Fe{};
  return c_[j].coeff(i);
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
  Field fld = common_field(f, g);
  std::vector<UniPoly> r(std::max(f.ycoeffs().size(), g.ycoeffs().size()),
                         UniPoly(fld));
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = f.coeff(static_cast<int>(j)) + g.coeff(static_cast<int>(j));
  }
  return BiPoly(fld, std::move(r));
}

BiPoly operator-(const BiPoly& f, const BiPoly& g) {
  Field fld = common_field(f, g);
  std::vector<UniPoly> r(std::max(f.ycoeffs().size(), g.ycoeffs().size()),
                         UniPoly(fld));
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = f.coeff(static_cast<int>(j)) - g.coeff(static_cast<int>(j));
  }
  return BiPoly(fld, std::move(r));
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) { return bi_mul(f, g); }

BiPoly mul_y_power(const BiPoly& f, int k) {
  if (f.is_zero()) return f;
  std::vector<UniPoly> r(k, UniPoly(f.field()));
  r.insert(r.end(), f.ycoeffs().begin(), f.ycoeffs().end());
  return BiPoly(f.field(), std::move(r));
}

BiPoly mul_uni(const BiPoly& f, const UniPoly& u) {
  std::vector<UniPoly> r;
  r.reserve(f.ycoeffs().size());
  for (const UniPoly& c : f.ycoeffs()) r.push_back(uni_mul(c, u));
  return BiPoly(f.field(), std::move(r));
}

BiPoly rem_x(const BiPoly& f, const UniPoly& m) {
  std::vector<UniPoly> r;
  r.reserve(f.ycoeffs().size());
  for (const UniPoly& c : f.ycoeffs()) r.push_back(uni_rem(c, m));
  return BiPoly(f.field(), std::move(r));
}

BiPoly bi_mul(const BiPoly& f, const BiPoly& g) {
  Field fld = common_field(f, g);
  if (f.is_zero() || g.is_zero()) return BiPoly(fld);
  const int width = f.deg_x() + g.deg_x() + 1;
  auto pack = [&](const BiPoly& h) {
    std::vector<Fe> v(static_cast<std::size_t>(h.deg_y()) * width +
                      h.lc_y().size());
    for (int j = 0; j <= h.deg_y(); ++j) {
      const auto& c = h.ycoeffs()[j].coeffs();
      std::copy(c.begin(), c.end(), v.begin() + static_cast<std::size_t>(j) * width);
    }
    return UniPoly(fld, std::move(v));
  };
  UniPoly prod = uni_mul(pack(f), pack(g));
  const int dy = f.deg_y() + g.deg_y();
  std::vector<UniPoly> r(dy + 1, UniPoly(fld));
  const auto& pc = prod.coeffs();
  for (int j = 0; j <= dy; ++j) {
    std::size_t lo = static_cast<std::size_t>(j) * width;
    if (lo >= pc.size()) break;
    std::size_t hi = std::min(pc.size(), lo + width);
    r[j] = UniPoly(fld, std::vector<Fe>(pc.begin() + lo, pc.begin() + hi));
  }
  return BiPoly(fld, std::move(r));
}

std::pair<BiPoly, BiPoly> y_split(const BiPoly& f, int eta) {
  if (eta < 0) throw PreconditionError("negative split degree");
  const auto& c = f.ycoeffs();
  if (static_cast<int>(c.size()) <= eta) return {BiPoly(f.field()), f};
  std::vector<UniPoly> lo(c.begin(), c.begin() + eta);
  std::vector<UniPoly> hi(c.begin() + eta, c.end());
  return {BiPoly(f.field(), std::move(hi)), BiPoly(f.field(), std::move(lo))};
}

BiPoly shear_poly(const BiPoly& f, Fe a, Fe b) {
  const Field& fld = f.field();
  if (f.is_zero()) return f;
  const int dx = f.deg_x();
  const int dy = f.deg_y();
  std::vector<std::vector<Fe>> out(dx + dy + 1,
                                   std::vector<Fe>(dx + 1, Fe{}));
  for (int t = 0; t <= dx + dy; ++t) {
    // h_t(z) = sum_i f_{i, t-i} z^i
    std::vector<Fe> h(std::min(t, dx) + 1);
    bool any = false;
    for (int i = 0; i <= std::min(t, dx); ++i) {
      h[i] = f.term(i, t - i);
      any = any || !fld.is_zero(h[i]);
    }
    if (!any) continue;
    UniPoly s = taylor_shift(UniPoly(fld, std::move(h)), a, b);
    for (int i = 0; i <= s.deg(); ++i) out[t - i][i] = s.coeffs()[i];
  }
  std::vector<UniPoly> r;
  r.reserve(out.size());
  for (auto& row : out) r.emplace_back(fld, std::move(row));
  return BiPoly(fld, std::move(r));
}

BiPoly transpose(const BiPoly& f) {
  if (f.is_zero()) return f;
  const int dx = f.deg_x();
  std::vector<std::vector<Fe>> out(dx + 1,
                                   std::vector<Fe>(f.deg_y() + 1, Fe{}));
  for (int j = 0; j <= f.deg_y(); ++j) {
    const auto& c = f.ycoeffs()[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i][j] = c[i];
  }
  std::vector<UniPoly> r;
  for (auto& row : out) r.emplace_back(f.field(), std::move(row));
  return BiPoly(f.field(), std::move(r));
}

Fe bi_eval(const BiPoly& f, Fe alpha, Fe beta) {
  const Field& fld = f.field();
  Fe acc{};
  for (int j = f.deg_y(); j >= 0; --j) {
    acc = fld.add(fld.mul(acc, beta), horner(f.ycoeffs()[j], alpha));
  }
  return acc;
}

void check_gb_shape(const std::vector<BiPoly>& G) {
  if (G.empty()) throw PreconditionError("empty Groebner basis");
  if (G[0].deg_y() != 0) {
    throw PreconditionError("first basis element must be a nonzero polynomial in x");
  }
  for (std::size_t i = 1; i < G.size(); ++i) {
    if (G[i].deg_y() <= G[i - 1].deg_y()) {
      throw PreconditionError("basis y-degrees must increase strictly");
    }
    if (!uni_rem(G[i - 1].lc_y(), G[i].lc_y()).is_zero()) {
      throw PreconditionError("y-leading coefficients must divide their predecessors");
    }
    if (G[i].lc_y().deg() >= G[i - 1].lc_y().deg()) {
      throw PreconditionError("basis is not minimal");
    }
  }
}

BiPoly rem_gb(const BiPoly& f, const std::vector<BiPoly>& G) {
  check_gb_shape(G);
  const Field& fld = G[0].field();
  if (f.is_zero()) return BiPoly(fld);
  if (!(f.field() == fld)) throw ContextMismatch("f and G over different fields");
  std::vector<UniPoly> rows = f.ycoeffs();
  std::size_t gi = G.size() - 1;
  for (int j = static_cast<int>(rows.size()) - 1; j >= 0; --j) {
    while (G[gi].deg_y() > j) --gi;
    const BiPoly& b = G[gi];
    const int d = b.deg_y();
    if (rows[j].deg() < b.lc_y().deg()) continue;
    auto [q, r] = uni_divrem(rows[j], b.lc_y());
    rows[j] = std::move(r);
    for (int k = 0; k < d; ++k) {
      if (b.ycoeffs()[k].is_zero()) continue;
      rows[j - d + k] = rows[j - d + k] - uni_mul(q, b.ycoeffs()[k]);
    }
  }
  return BiPoly(fld, std::move(rows));
}

BiPoly change_field(const BiPoly& f, const Field& target) {
  std::vector<UniPoly> r;
  r.reserve(f.ycoeffs().size());
  for (const UniPoly& c : f.ycoeffs()) r.push_back(change_field(c, target));
  return BiPoly(target, std::move(r));
}

std::pair<BiPoly, BiPoly> split_components(const BiPoly& s) {
  Field base = s.field().base();
  std::vector<UniPoly> r1, r2;
  for (const UniPoly& c : s.ycoeffs()) {
    std::vector<Fe> v1(c.size()), v2(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      v1[i] = {c.coeffs()[i].a0, 0};
      v2[i] = {c.coeffs()[i].a1, 0};
    }
    r1.emplace_back(base, std::move(v1));
    r2.emplace_back(base, std::move(v2));
  }
  return {BiPoly(base, std::move(r1)), BiPoly(base, std::move(r2))};
}

std::string format_bi(const BiPoly& f) {
  std::string s = "ydeg " + std::to_string(f.is_zero() ? -1 : f.deg_y()) + "\n";
  for (const UniPoly& c : f.ycoeffs()) s += format_uni(c) + "\n";
  return s;
}

BiPoly read_bi(const Field& f, std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing 'ydeg' header");
  std::istringstream hs(line);
  std::string tag;
  long long k;
  if (!(hs >> tag >> k) || tag != "ydeg" || k < -1) {
    throw ParseError("bad bivariate header '" + line + "'");
  }
  std::vector<UniPoly> rows;
  for (long long j = 0; j <= k; ++j) {
    if (!next_line(in, line)) throw ParseError("truncated bivariate block");
    rows.push_back(parse_uni(f, line));
  }
  if (k >= 0 && rows.back().is_zero()) {
    throw ParseError("top y-coefficient is zero");
  }
  return BiPoly(f, std::move(rows));
}

}  // namespace bireshape
