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

#include "bireshape/upoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bireshape/errors.hpp"
#include "bireshape/ntt.hpp"

namespace bireshape {
namespace {

constexpr int kNewtonDivCutoff = 48;
constexpr std::size_t kTaylorLeaf = 16;
constexpr std::size_t kTreeLeaf = 8;

Field common_field(const UniPoly& f, const UniPoly& g) {
  if (!f.field().valid()) return g.field();
  if (!g.field().valid()) return f.field();
  if (!(f.field() == g.field())) {
    throw ContextMismatch("polynomials over different fields");
  }
  return f.field();
}

using Vec = std::vector<u64>;

Vec school(const Field& f, const u64* a, std::size_t na, const u64* b,
           std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  Vec r(na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      r[i + j] = f.add_mod(r[i + j], f.mul_mod(a[i], b[j]));
    }
  }
  return r;
}

void add_into(const Field& f, Vec& dst, const Vec& src, std::size_t off) {
  if (dst.size() < off + src.size()) dst.resize(off + src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[off + i] = f.add_mod(dst[off + i], src[i]);
  }
}

Vec kara(const Field& f, const u64* a, std::size_t na, const u64* b,
         std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  if (na > nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (na <= kSchoolbookCutoff) return school(f, a, na, b, nb);
  if (2 * na <= nb) {
    // Unbalanced: multiply a against na-sized slices of b.
    Vec r;
    for (std::size_t off = 0; off < nb; off += na) {
      std::size_t len = std::min(na, nb - off);
      add_into(f, r, kara(f, a, na, b + off, len), off);
    }
    return r;
  }
  const std::size_t m = nb / 2;
  const std::size_t na1 = na > m ? na - m : 0;
  Vec z0 = kara(f, a, std::min(na, m), b, m);
  Vec z2 = kara(f, a + m, na1, b + m, nb - m);
  Vec sa(std::max(std::min(na, m), na1), 0), sb(std::max(m, nb - m), 0);
  for (std::size_t i = 0; i < std::min(na, m); ++i) sa[i] = a[i];
  for (std::size_t i = 0; i < na1; ++i) sa[i] = f.add_mod(sa[i], a[m + i]);
  for (std::size_t i = 0; i < m; ++i) sb[i] = b[i];
  for (std::size_t i = 0; i < nb - m; ++i) sb[i] = f.add_mod(sb[i], b[m + i]);
  Vec z1 = kara(f, sa.data(), sa.size(), sb.data(), sb.size());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub_mod(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub_mod(z1[i], z2[i]);
  Vec r(na + nb - 1, 0);
  add_into(f, r, z0, 0);
  add_into(f, r, z1, m);
  add_into(f, r, z2, 2 * m);
  r.resize(na + nb - 1);
  return r;
}

enum class Path { kAuto, kSchool, kKaratsuba };

Vec base_mul(const Field& f, const Vec& a, const Vec& b, Path path) {
  if (a.empty() || b.empty()) return {};
  if (path == Path::kSchool) return school(f, a.data(), a.size(), b.data(), b.size());
  if (path == Path::kKaratsuba) return kara(f, a.data(), a.size(), b.data(), b.size());
  if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) {
    return school(f, a.data(), a.size(), b.data(), b.size());
  }
  if (ntt_supports(f, a.size() + b.size() - 1)) return ntt_multiply(f, a, b);
  return kara(f, a.data(), a.size(), b.data(), b.size());
}

Vec component(const std::vector<Fe>& c, int which) {
  Vec r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = which == 0 ? c[i].a0 : c[i].a1;
  return r;
}

bool all_base(const std::vector<Fe>& c) {
  for (const Fe& x : c) {
    if (x.a1 != 0) return false;
  }
  return true;
}

UniPoly mul_path(const UniPoly& f, const UniPoly& g, Path path) {
  Field fld = common_field(f, g);
  if (f.is_zero() || g.is_zero()) return UniPoly(fld);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Fe> out(a.size() + b.size() - 1);
  bool a_base = !fld.is_extension() || all_base(a);
  bool b_base = !fld.is_extension() || all_base(b);
  Vec a0 = component(a, 0), b0 = component(b, 0);
  if (a_base && b_base) {
    Vec r = base_mul(fld, a0, b0, path);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {r[i], 0};
  } else if (a_base || b_base) {
    Vec r0 = base_mul(fld, a0, b0, path);
    Vec r1 = a_base ? base_mul(fld, a0, component(b, 1), path)
                    : base_mul(fld, component(a, 1), b0, path);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {r0[i], r1[i]};
  } else {
    // Karatsuba over the components, t^2 = c.
    Vec a1 = component(a, 1), b1 = component(b, 1);
    Vec p0 = base_mul(fld, a0, b0, path);
    Vec p2 = base_mul(fld, a1, b1, path);
    Vec sa(a.size()), sb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) sa[i] = fld.add_mod(a0[i], a1[i]);
    for (std::size_t i = 0; i < b.size(); ++i) sb[i] = fld.add_mod(b0[i], b1[i]);
    Vec p1 = base_mul(fld, sa, sb, path);
    const u64 c = fld.nonresidue();
    for (std::size_t i = 0; i < out.size(); ++i) {
      u64 mid = fld.sub_mod(fld.sub_mod(p1[i], p0[i]), p2[i]);
      out[i] = {fld.add_mod(p0[i], fld.mul_mod(c, p2[i])), mid};
    }
  }
  return UniPoly(fld, std::move(out));
}

std::pair<UniPoly, UniPoly> divrem_school(const UniPoly& f, const UniPoly& g) {
  const Field& fld = g.field();
  std::vector<Fe> r = f.coeffs();
  const auto& gc = g.coeffs();
  const int dg = g.deg();
  const int df = f.deg();
  std::vector<Fe> q(df - dg + 1);
  Fe inv_lc = fld.inv(g.lc());
  for (int i = df; i >= dg; --i) {
    Fe c = fld.mul(r[i], inv_lc);
    q[i - dg] = c;
    if (fld.is_zero(c)) continue;
    for (int j = 0; j <= dg; ++j) {
      r[i - dg + j] = fld.sub(r[i - dg + j], fld.mul(c, gc[j]));
    }
  }
  r.resize(dg);
  return {UniPoly(fld, std::move(q)), UniPoly(fld, std::move(r))};
}

}  // namespace

UniPoly::UniPoly(const Field& f, std::vector<Fe> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  for (const Fe& x : c_) {
    if (!field_.is_canonical(x)) {
      throw ContextMismatch("coefficient " + field_.format(x) +
                            " is not canonical");
    }
  }
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Field& f, Fe c) { return UniPoly(f, {c}); }

UniPoly UniPoly::monomial(const Field& f, Fe c, int k) {
  std::vector<Fe> v(k + 1);
  v[k] = c;
  return UniPoly(f, std::move(v));
}

UniPoly UniPoly::linear_root(const Field& f, Fe a) {
  return UniPoly(f, {f.neg(a), f.one()});
}

UniPoly operator+(const UniPoly& f, const UniPoly& g) {
  Field fld = common_field(f, g);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Fe> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = fld.add(f.coeff(i), g.coeff(i));
  }
  return UniPoly(fld, std::move(r));
}

UniPoly operator-(const UniPoly& f, const UniPoly& g) {
  Field fld = common_field(f, g);
  std::vector<Fe> r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = fld.sub(f.coeff(i), g.coeff(i));
  }
  return UniPoly(fld, std::move(r));
}

UniPoly operator-(const UniPoly& f) {
  std::vector<Fe> r(f.coeffs());
  for (Fe& x : r) x = f.field().neg(x);
  return UniPoly(f.field(), std::move(r));
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) { return uni_mul(f, g); }

UniPoly scale(const UniPoly& f, Fe c) {
  std::vector<Fe> r(f.coeffs());
  for (Fe& x : r) x = f.field().mul(x, c);
  return UniPoly(f.field(), std::move(r));
}

UniPoly shift_up(const UniPoly& f, int k) {
  if (f.is_zero()) return f;
  std::vector<Fe> r(k, Fe{});
  r.insert(r.end(), f.coeffs().begin(), f.coeffs().end());
  return UniPoly(f.field(), std::move(r));
}

UniPoly truncate(const UniPoly& f, int k) {
  if (static_cast<int>(f.size()) <= k) return f;
  return UniPoly(f.field(),
                 std::vector<Fe>(f.coeffs().begin(), f.coeffs().begin() + k));
}

UniPoly make_monic(const UniPoly& f) {
  if (f.is_zero()) throw ArithmeticError("zero polynomial has no monic form");
  return scale(f, f.field().inv(f.lc()));
}

UniPoly derivative(const UniPoly& f) {
  if (f.size() <= 1) return UniPoly(f.field());
  std::vector<Fe> r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    r[i - 1] = f.field().mul(f.field().from_int(static_cast<long long>(i % f.field().p())),
                             f.coeffs()[i]);
  }
  return UniPoly(f.field(), std::move(r));
}

UniPoly reversed(const UniPoly& f, int n) {
  std::vector<Fe> r(n);
  for (int i = 0; i < n; ++i) r[i] = f.coeff(n - 1 - i);
  return UniPoly(f.field(), std::move(r));
}

UniPoly change_field(const UniPoly& f, const Field& target) {
  if (f.field().p() != target.p()) {
    throw ContextMismatch("fields have different characteristic");
  }
  std::vector<Fe> r(f.coeffs());
  if (!target.is_extension()) {
    for (Fe& x : r) x = f.field().project(x);
  }
  return UniPoly(target, std::move(r));
}

UniPoly uni_mul(const UniPoly& f, const UniPoly& g) {
  return mul_path(f, g, Path::kAuto);
}

UniPoly mul_schoolbook(const UniPoly& f, const UniPoly& g) {
  return mul_path(f, g, Path::kSchool);
}

UniPoly mul_karatsuba(const UniPoly& f, const UniPoly& g) {
  return mul_path(f, g, Path::kKaratsuba);
}

UniPoly inverse_series(const UniPoly& f, int k) {
  const Field& fld = f.field();
  if (fld.is_zero(f.coeff(0))) {
    throw ArithmeticError("series inverse of a polynomial with f(0) = 0");
  }
  UniPoly h = UniPoly::constant(fld, fld.inv(f.coeff(0)));
  UniPoly two = UniPoly::constant(fld, fld.from_int(2));
  for (int prec = 1; prec < k;) {
    prec = std::min(2 * prec, k);
    UniPoly e = truncate(uni_mul(truncate(f, prec), h), prec);
    h = truncate(uni_mul(h, two - e), prec);
  }
  return truncate(h, k);
}

std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& f, const UniPoly& g) {
  Field fld = common_field(f, g);
  if (g.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (f.deg() < g.deg()) return {UniPoly(fld), f};
  const int k = f.deg() - g.deg() + 1;
  if (g.deg() < kNewtonDivCutoff || k < kNewtonDivCutoff) {
    return divrem_school(f, g);
  }
  UniPoly rg = reversed(g, g.deg() + 1);
  UniPoly rf = reversed(f, f.deg() + 1);
  UniPoly rq = truncate(uni_mul(truncate(rf, k), inverse_series(rg, k)), k);
  UniPoly q = reversed(rq, k);
  UniPoly r = truncate(f - uni_mul(q, g), g.deg());
  return {q, r};
}

UniPoly uni_rem(const UniPoly& f, const UniPoly& g) {
  if (f.deg() < g.deg()) return f;
  return uni_divrem(f, g).second;
}

UniPoly uni_quo(const UniPoly& f, const UniPoly& g) {
  return uni_divrem(f, g).first;
}

UniPoly uni_gcd(UniPoly f, UniPoly g) {
  while (!g.is_zero()) {
    UniPoly r = uni_rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f.is_zero() ? f : make_monic(f);
}

Fe horner(const UniPoly& f, Fe a) {
  const Field& fld = f.field();
  Fe r{};
  for (std::size_t i = f.size(); i-- > 0;) {
    r = fld.add(fld.mul(r, a), f.coeffs()[i]);
  }
  return r;
}

std::vector<Fe> uni_mpe(const UniPoly& f, const std::vector<Fe>& pts) {
  if (pts.size() <= kHornerCutoff) {
    std::vector<Fe> out;
    out.reserve(pts.size());
    for (const Fe& a : pts) out.push_back(horner(f, a));
    return out;
  }
  return SubproductTree(f.field(), pts).evaluate(f);
}

UniPoly uni_interp(const Field& f, const std::vector<Fe>& xs,
                   const std::vector<Fe>& ys) {
  if (xs.size() != ys.size()) {
    throw PreconditionError("interpolation needs as many values as points");
  }
  if (xs.empty()) return UniPoly(f);
  return SubproductTree(f, xs, true).interpolate(ys);
}

UniPoly uni_interp(const Field& f, const std::vector<std::pair<Fe, Fe>>& pts) {
  std::vector<Fe> xs, ys;
  for (const auto& [x, y] : pts) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return uni_interp(f, xs, ys);
}

UniPoly taylor_shift(const UniPoly& h, Fe a, Fe b) {
  const Field& fld = h.field();
  if (h.is_zero()) return h;
  const std::size_t n = std::bit_ceil(h.size());
  // powers[i] = (z + b)^(2^i)
  std::vector<UniPoly> powers;
  powers.push_back(UniPoly(fld, {b, fld.one()}));
  for (std::size_t len = 2; len < n; len <<= 1) {
    powers.push_back(uni_mul(powers.back(), powers.back()));
  }
  const UniPoly zb = powers[0];
  auto rec = [&](auto&& self, std::size_t off, std::size_t len) -> UniPoly {
    if (off >= h.size()) return UniPoly(fld);
    if (len <= kTaylorLeaf) {
      UniPoly r(fld);
      std::size_t top = std::min(off + len, h.size());
      for (std::size_t i = top; i-- > off;) {
        r = uni_mul(r, zb) + UniPoly::constant(fld, h.coeffs()[i]);
      }
      return r;
    }
    std::size_t half = len / 2;
    UniPoly lo = self(self, off, half);
    UniPoly hi = self(self, off + half, half);
    if (hi.is_zero()) return lo;
    return lo + uni_mul(hi, powers[std::countr_zero(half)]);
  };
  UniPoly k = rec(rec, 0, n);
  std::vector<Fe> c(k.coeffs());
  Fe ap = fld.one();
  for (Fe& x : c) {
    x = fld.mul(x, ap);
    ap = fld.mul(ap, a);
  }
  return UniPoly(fld, std::move(c));
}

SubproductTree::SubproductTree(const Field& f, std::vector<Fe> points,
                               bool for_interpolation)
    : field_(f), pts_(std::move(points)) {
  if (pts_.empty()) throw PreconditionError("empty point list");
  std::vector<UniPoly> leaves;
  leaves.reserve(pts_.size());
  for (const Fe& a : pts_) leaves.push_back(UniPoly::linear_root(f, a));
  levels_.push_back(std::move(leaves));
  while (levels_.back().size() > 1) {
    const auto& cur = levels_.back();
    std::vector<UniPoly> next;
    next.reserve((cur.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < cur.size(); i += 2) {
      next.push_back(uni_mul(cur[i], cur[i + 1]));
    }
    if (cur.size() % 2) next.push_back(cur.back());
    levels_.push_back(std::move(next));
  }
  // The dividend at a node is reduced modulo its parent; the root also
  // serves dividends of up to three times its degree.
  inv_rev_.resize(levels_.size());
  for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
    inv_rev_[lv].resize(levels_[lv].size(), UniPoly(f));
    for (std::size_t i = 0; i < levels_[lv].size(); ++i) {
      const UniPoly& g = levels_[lv][i];
      if (g.deg() < kNewtonDivCutoff) continue;
      const int parent = lv + 1 < levels_.size() ? levels_[lv + 1][i / 2].deg() : 4 * g.deg();
      const int prec = parent - g.deg();
      if (prec < kNewtonDivCutoff) continue;
      inv_rev_[lv][i] = inverse_series(reversed(g, g.deg() + 1), prec);
    }
  }
  if (for_interpolation) {
    std::vector<Fe> w = evaluate(derivative(root()));
    inv_weights_.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (field_.is_zero(w[i])) {
        throw DistinctnessError("repeated interpolation point " +
                                field_.format(pts_[i]));
      }
      inv_weights_[i] = field_.inv(w[i]);
    }
  }
}

void SubproductTree::eval_rec(const UniPoly& f, std::size_t level,
                              std::size_t idx, std::vector<Fe>& out) const {
  const std::size_t lo = idx << level;
  const std::size_t hi = std::min(pts_.size(), (idx + 1) << level);
  if (hi - lo <= kTreeLeaf) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = horner(f, pts_[i]);
    return;
  }
  const auto& below = levels_[level - 1];
  const std::size_t l = 2 * idx;
  if (l + 1 >= below.size()) {
    eval_rec(f, level - 1, l, out);
    return;
  }
  eval_rec(node_rem(f, level - 1, l), level - 1, l, out);
  eval_rec(node_rem(f, level - 1, l + 1), level - 1, l + 1, out);
}

UniPoly SubproductTree::node_rem(const UniPoly& f, std::size_t level, std::size_t idx) const {
  const UniPoly& g = levels_[level][idx];
  if (f.deg() < g.deg()) return f;
  const UniPoly& inv = inv_rev_[level][idx];
  const int k = f.deg() - g.deg() + 1;
  if (inv.is_zero() || k > static_cast<int>(inv.size())) return uni_rem(f, g);
  UniPoly rq = truncate(uni_mul(truncate(reversed(f, f.deg() + 1), k), truncate(inv, k)), k);
  return truncate(f - uni_mul(reversed(rq, k), g), g.deg());
}

std::vector<Fe> SubproductTree::evaluate(const UniPoly& f) const {
  if (!(f.field() == field_) && f.field().valid() && !f.is_zero()) {
    throw ContextMismatch("polynomial and evaluation points over different fields");
  }
  std::vector<Fe> out(pts_.size());
  eval_rec(node_rem(f, levels_.size() - 1, 0), levels_.size() - 1, 0, out);
  return out;
}

UniPoly SubproductTree::comb_rec(const std::vector<Fe>& w, std::size_t level,
                                 std::size_t idx) const {
  if (level == 0) return UniPoly::constant(field_, w[idx]);
  const auto& below = levels_[level - 1];
  const std::size_t l = 2 * idx;
  if (l + 1 >= below.size()) return comb_rec(w, level - 1, l);
  UniPoly left = comb_rec(w, level - 1, l);
  UniPoly right = comb_rec(w, level - 1, l + 1);
  return uni_mul(left, below[l + 1]) + uni_mul(right, below[l]);
}

UniPoly SubproductTree::interpolate(const std::vector<Fe>& values) const {
  if (inv_weights_.size() != pts_.size()) {
    throw PreconditionError("tree was not built for interpolation");
  }
  if (values.size() != pts_.size()) {
    throw PreconditionError("expected " + std::to_string(pts_.size()) +
                            " values, got " + std::to_string(values.size()));
  }
  std::vector<Fe> w(values.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = field_.mul(values[i], inv_weights_[i]);
  }
  return comb_rec(w, levels_.size() - 1, 0);
}

std::string format_uni(const UniPoly& f) {
  if (f.is_zero()) return "-1";
  std::string s = std::to_string(f.deg());
  for (const Fe& x : f.coeffs()) {
    s += ' ';
    s += f.field().format(x);
  }
  return s;
}

UniPoly parse_uni(const Field& f, const std::string& line) {
  std::istringstream in(line);
  long long deg;
  if (!(in >> deg) || deg < -1) {
    throw ParseError("bad polynomial line '" + line + "'");
  }
  std::vector<Fe> c;
  for (long long i = 0; i <= deg; ++i) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("polynomial line too short: '" + line + "'");
    c.push_back(f.parse(tok));
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data in '" + line + "'");
  if (deg >= 0 && f.is_zero(c.back())) {
    throw ParseError("leading coefficient is zero in '" + line + "'");
  }
  return UniPoly(f, std::move(c));
}

}  // namespace bireshape
