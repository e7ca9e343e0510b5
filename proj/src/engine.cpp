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

#include "bireshape/engine.hpp"

#include <algorithm>

#include "bireshape/errors.hpp"

namespace bireshape {

namespace {

void check_field(const BiPoly& f, const Field& F) {
  if (!f.is_zero() && !(f.field() == F))
    throw ContextMismatch("input polynomial is over a different field than the plan");
}

void check_reshaper_for(const Reshaper& r, const Field& F) {
  check_reshaper_shape(r);
  for (const BiPoly& g : r.g)
    if (!(g.field() == F)) throw ContextMismatch("reshaper over the wrong field");
}

// r(x, t x + y)
BiPoly shear_y(const BiPoly& r, Fe t) {
  return transpose(shear_poly(transpose(r), r.field().one(), t));
}

struct InterpShear {
  Field ext;
  Fe theta;
  PointSet sheared;
};

// (alpha, t alpha + beta) over an extension, or P itself when nu_y(P) = 1.
InterpShear interp_shear(const PointSet& P) {
  const Field& K = P.field();
  if (y_valency(P) == 1) return {K, K.zero(), P};
  if (K.is_extension()) throw PreconditionError("interpolate needs points over a prime field");
  const Field L = build_quadratic_extension(K);
  const Fe t = L.theta();
  std::vector<Point> sh;
  for (const Point& pt : P.points()) {
    Fe a = L.embed(pt.alpha);
    sh.push_back({a, L.add(L.mul(t, a), L.embed(pt.beta))});
  }
  return {L, t, PointSet(L, sh)};
}

}  // namespace

long long isqrt(long long n) {
  long long s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

ReshapingSequence InterpPlan::sequence() const {
  std::vector<int> eta = first.seq.eta();
  eta.insert(eta.end(), second.seq.eta().begin() + 1, second.seq.eta().end());
  return ReshapingSequence(eta);
}

long long InterpPlan::degx_bound() const {
  return isqrt(static_cast<long long>(points.size())) + first.total_degx() +
         second.total_degx();
}

PointSet shear_points(const PointSet& P, const Field& ext) {
  const Fe t = ext.theta();
  std::vector<Point> out;
  for (const Point& pt : P.points())
    out.push_back({ext.add(ext.embed(pt.alpha), ext.mul(t, ext.embed(pt.beta))),
                   ext.embed(pt.beta)});
  return PointSet(ext, out);
}

MpePlan make_mpe_plan(MpeVariant variant, const PointSet& points, int d,
                      Reshaper reshaper) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (points.empty()) throw PreconditionError("empty point set");
  MpePlan plan;
  plan.variant = variant;
  plan.d = d;
  plan.points = points;
  if (variant == MpeVariant::kDistinct) {
    if (x_valency(points) != 1)
      throw DistinctnessError("mpe-distinct needs pairwise distinct x-coordinates");
    plan.work = points;
  } else {
    if (points.field().is_extension())
      throw PreconditionError("mpe-shear needs points over a prime field");
    plan.work = shear_points(points, build_quadratic_extension(points.field()));
    if (x_valency(plan.work) != 1)
      throw Error("internal check failed: sheared x-coordinates repeat");
  }
  if (reshaper.seq.front() != d || reshaper.seq.back() != 1)
    throw PreconditionError("mpe reshaper sequence must run from d down to 1");
  check_reshaper_for(reshaper, plan.work.field());
  plan.reshaper = std::move(reshaper);
  plan.report = balance_report(plan.reshaper, static_cast<long long>(points.size()));
  plan.tree = std::make_shared<SubproductTree>(plan.work.field(), plan.work.alphas());
  return plan;
}

MpePlan mpe_distinct_precompute(const PointSet& P, int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (P.empty()) throw PreconditionError("empty point set");
  if (x_valency(P) != 1)
    throw DistinctnessError("mpe-distinct needs pairwise distinct x-coordinates");
  auto build = build_reshaper_pack(P, make_sequence(d, 1, 1));
  return make_mpe_plan(MpeVariant::kDistinct, P, d, std::move(build.reshaper));
}

std::vector<Fe> mpe_distinct_online(const MpePlan& plan, const BiPoly& f) {
  check_field(f, plan.field());
  if (f.deg_y() >= plan.d)
    throw DegreeError("deg_y f = " + std::to_string(f.deg_y()) + " >= d = " +
                      std::to_string(plan.d));
  BiPoly h = reshape(f, plan.reshaper);
  return plan.tree->evaluate(h.coeff(0));
}

MpePlan mpe_shear_precompute(const PointSet& P, int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (P.empty()) throw PreconditionError("empty point set");
  if (P.field().is_extension())
    throw PreconditionError("mpe-shear needs points over a prime field");
  PointSet work = shear_points(P, build_quadratic_extension(P.field()));
  auto build = build_reshaper_pack(work, make_sequence(d, 1, 1));
  return make_mpe_plan(MpeVariant::kShear, P, d, std::move(build.reshaper));
}

std::vector<Fe> mpe_shear_online_raw(const MpePlan& plan, const BiPoly& f) {
  const Field& K = plan.points.field();
  const Field& L = plan.field();
  check_field(f, K);
  if (!f.is_zero() && f.deg_x() + f.deg_y() >= plan.d)
    throw DegreeError("deg_x f + deg_y f = " + std::to_string(f.deg_x() + f.deg_y()) +
                      " >= d = " + std::to_string(plan.d));
  // f(x - t y, y)
  BiPoly fbar = shear_poly(change_field(f, L), L.one(), L.neg(L.theta()));
  BiPoly h = reshape(fbar, plan.reshaper);
  return plan.tree->evaluate(h.coeff(0));
}

std::vector<Fe> mpe_shear_online(const MpePlan& plan, const BiPoly& f) {
  const Field& L = plan.field();
  std::vector<Fe> raw = mpe_shear_online_raw(plan, f);
  for (Fe& v : raw) {
    if (!L.in_base(v)) throw Error("internal check failed: shear evaluation outside the base field");
    v = L.project(v);
  }
  return raw;
}

std::vector<Fe> mpe_online(const MpePlan& plan, const BiPoly& f) {
  return plan.variant == MpeVariant::kDistinct ? mpe_distinct_online(plan, f)
                                               : mpe_shear_online(plan, f);
}

InterpPlan make_interp_plan(const PointSet& points, int d, int k1, Reshaper first,
                            Reshaper second) {
  if (points.empty()) throw PreconditionError("empty point set");
  const long long n = static_cast<long long>(points.size());
  if (d < x_valency(points) || d > isqrt(n) + 1)
    throw PreconditionError("interpolate needs nu_x(P) <= d <= floor(sqrt n) + 1");
  if (first.seq.back() != second.seq.front() || second.seq.back() != d ||
      first.seq.k() != k1 || first.seq.front() < n)
    throw PreconditionError("interpolation sequences do not fit n and d");
  InterpPlan plan;
  plan.d = d;
  plan.k1 = k1;
  plan.points = points;
  InterpShear sh = interp_shear(points);
  plan.ext = sh.ext;
  plan.theta = sh.theta;
  plan.sheared = sh.sheared;
  const Field& K = points.field();
  const Field& L = plan.ext;
  check_reshaper_for(first, L);
  check_reshaper_for(second, K);
  plan.first = std::move(first);
  plan.second = std::move(second);
  plan.first_report = balance_report(plan.first, n);
  plan.second_report = balance_report(plan.second, n);
  plan.tree = std::make_shared<SubproductTree>(L, plan.sheared.betas(), true);
  return plan;
}

InterpPlan interpolate_precompute(const PointSet& P, int d) {
  if (P.empty()) throw PreconditionError("empty point set");
  const long long n = static_cast<long long>(P.size());
  const int vx = x_valency(P);
  if (d < vx || d > isqrt(n) + 1)
    throw PreconditionError("interpolate needs nu_x(P) = " + std::to_string(vx) +
                            " <= d <= floor(sqrt n) + 1 = " + std::to_string(isqrt(n) + 1));
  const int mid = std::max(static_cast<int>(isqrt(n)), d);
  const int top = std::max(static_cast<int>(n), mid);
  auto [seq, k1] = make_sequence_through(top, mid, d, vx);
  ReshapingSequence s1 = seq.slice(0, k1), s2 = seq.slice(k1, seq.k());
  auto b1 = build_reshaper_pack(interp_shear(P).sheared, s1);
  auto b2 = build_reshaper_pack(P, s2);
  return make_interp_plan(P, d, k1, std::move(b1.reshaper), std::move(b2.reshaper));
}

BiPoly interpolate_online(const InterpPlan& plan, const std::vector<Fe>& gamma) {
  const Field& K = plan.points.field();
  const Field& L = plan.ext;
  if (gamma.size() != plan.points.size())
    throw DegreeError("expected " + std::to_string(plan.points.size()) +
                      " values, got " + std::to_string(gamma.size()));
  std::vector<Fe> vals;
  for (const Fe& g : gamma) {
    if (!K.is_canonical(g)) throw ContextMismatch("interpolation value not in the base field");
    vals.push_back(L.embed(g));
  }
  UniPoly u = plan.tree->interpolate(vals);
  // u as a polynomial in y.
  std::vector<UniPoly> ycoeffs;
  for (const Fe& c : u.coeffs()) ycoeffs.push_back(UniPoly::constant(L, c));
  BiPoly r = reshape(BiPoly(L, ycoeffs), plan.first);
  BiPoly s1 = r;
  if (!(L == K)) s1 = split_components(shear_y(r, plan.theta)).first;
  BiPoly f = reshape(s1, plan.second);
  if (!(f.deg_y() < plan.d) ||
      (!f.is_zero() && f.deg_x() > plan.degx_bound()))
    throw Error("internal check failed: interpolation degree bounds");
  return f;
}

ModCompPlan make_modcomp_plan(const UniPoly& M, const UniPoly& A, int d,
                              Reshaper reshaper) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (M.deg() < 1) throw PreconditionError("modulus must have positive degree");
  if (A.deg() >= M.deg()) throw PreconditionError("modcomp needs deg M > deg A");
  ModCompPlan plan;
  plan.d = d;
  plan.M = make_monic(M);
  plan.A = uni_rem(A, plan.M);
  if (reshaper.seq.front() != d || reshaper.seq.back() != 1)
    throw PreconditionError("modcomp reshaper sequence must run from d down to 1");
  check_reshaper_for(reshaper, M.field());
  plan.reshaper = std::move(reshaper);
  plan.report = balance_report(plan.reshaper, plan.M.deg());
  return plan;
}

ModCompPlan modcomp_precompute(const UniPoly& M, const UniPoly& A, int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (M.deg() < 1) throw PreconditionError("modulus must have positive degree");
  if (A.deg() >= M.deg()) throw PreconditionError("modcomp needs deg M > deg A");
  auto build = build_reshaper_pack(M, A, make_sequence(d, 1, 1));
  return make_modcomp_plan(M, A, d, std::move(build.reshaper));
}

UniPoly modcomp_online(const ModCompPlan& plan, const BiPoly& f) {
  check_field(f, plan.M.field());
  if (f.deg_y() >= plan.d)
    throw DegreeError("deg_y f = " + std::to_string(f.deg_y()) + " >= d = " +
                      std::to_string(plan.d));
  return uni_rem(reshape(f, plan.reshaper).coeff(0), plan.M);
}

}  // namespace bireshape
