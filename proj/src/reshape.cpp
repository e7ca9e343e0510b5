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

#include "bireshape/reshape.hpp"

#include <algorithm>
#include <sstream>

#include "bireshape/errors.hpp"

namespace bireshape {

namespace {

int degx0(const BiPoly& f) { return f.is_zero() ? 0 : std::max(0, f.deg_x()); }

BiPoly y_power(const Field& F, int eta) { return BiPoly::monomial(F, F.one(), 0, eta); }

void check_contract(bool ok, const char* what) {
  if (!ok) throw Error(std::string("internal check failed: ") + what);
}

}  // namespace

ReshapingSequence::ReshapingSequence(std::vector<int> eta) {
  std::string why;
  if (!is_valid(eta, &why)) throw PreconditionError("invalid reshaping sequence: " + why);
  eta_ = std::move(eta);
}

bool ReshapingSequence::is_valid(const std::vector<int>& eta, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (eta.empty()) return fail("empty");
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] < 1) return fail("entry " + std::to_string(i) + " is not positive");
    if (i == 0) continue;
    if (eta[i] >= eta[i - 1])
      return fail("entry " + std::to_string(i) + " does not decrease");
    if (3 * static_cast<long long>(eta[i]) < 2LL * eta[i - 1] - 2)
      return fail("entry " + std::to_string(i) + " below floor(2*" +
                  std::to_string(eta[i - 1]) + "/3)");
  }
  return true;
}

int ReshapingSequence::min_delta() const {
  int best = 0;
  for (int i = 1; i <= k(); ++i) best = (i == 1) ? delta(i) : std::min(best, delta(i));
  return best;
}

ReshapingSequence ReshapingSequence::slice(int from, int to) const {
  if (from < 0 || to < from || to > k()) throw PreconditionError("bad sequence slice");
  return ReshapingSequence(std::vector<int>(eta_.begin() + from, eta_.begin() + to + 1));
}

ReshapingSequence make_sequence(int a, int b, int valency) {
  if (valency < 1 || b < valency || a < b)
    throw PreconditionError("make_sequence needs a >= b >= valency >= 1");
  const int v = valency - 1;
  std::vector<int> eta{a - v};
  while (eta.back() > b - v) eta.push_back(std::max(2 * eta.back() / 3, b - v));
  for (int& e : eta) e += v;
  return ReshapingSequence(std::move(eta));
}

std::pair<ReshapingSequence, int> make_sequence_through(int a, int mid, int b,
                                                        int valency) {
  if (mid > a || mid < b)
    throw PreconditionError("make_sequence_through needs a >= mid >= b");
  auto first = make_sequence(a, mid, valency);
  auto second = make_sequence(mid, b, valency);
  std::vector<int> eta = first.eta();
  eta.insert(eta.end(), second.eta().begin() + 1, second.eta().end());
  return {ReshapingSequence(std::move(eta)), first.k()};
}

BiPoly Reshaper::tail(int i) const { return g[i - 1] - y_power(g[i - 1].field(), seq[i]); }

int Reshaper::degx(int i) const { return degx0(g[i - 1]); }

long long Reshaper::total_degx() const {
  long long t = 0;
  for (int i = 1; i <= seq.k(); ++i) t += degx(i);
  return t;
}

void check_reshaper_shape(const Reshaper& r) {
  if (r.seq.empty()) throw PreconditionError("reshaper without sequence");
  if (static_cast<int>(r.g.size()) != r.seq.k())
    throw PreconditionError("reshaper has " + std::to_string(r.g.size()) +
                            " elements for " + std::to_string(r.seq.k()) + " steps");
  for (int i = 1; i <= r.seq.k(); ++i) {
    const BiPoly& g = r.g[i - 1];
    if (g.deg_y() != r.seq[i] || !g.lc_y().is_monic() || g.lc_y().deg() != 0)
      throw PreconditionError("reshaper element " + std::to_string(i) +
                              " is not y^" + std::to_string(r.seq[i]) + " + lower");
    if (r.tail(i).deg_y() >= r.seq.delta(i))
      throw PreconditionError("reshaper element " + std::to_string(i) +
                              " tail has y-degree >= " + std::to_string(r.seq.delta(i)));
  }
}

BiPoly reshape(const BiPoly& f, const Reshaper& r) {
  if (r.seq.empty()) throw PreconditionError("reshape without sequence");
  if (f.deg_y() >= r.seq.front())
    throw DegreeError("deg_y f = " + std::to_string(f.deg_y()) + " >= " +
                      std::to_string(r.seq.front()));
  BiPoly h = f;
  long long xbound = degx0(f);
  for (int i = 1; i <= r.seq.k(); ++i) {
    xbound += r.degx(i);
    if (h.deg_y() < r.seq[i]) continue;
    auto [h1, h0] = y_split(h, r.seq[i]);
    h = h0 - bi_mul(h1, r.tail(i));
  }
  check_contract(h.deg_y() < r.seq.back(), "reshape y-degree");
  check_contract(degx0(h) <= xbound, "reshape x-degree");
  return h;
}

BiPoly reshape(const BiPoly& f, const ReshapingSequence& seq,
               const std::vector<BiPoly>& g) {
  Reshaper r{seq, g};
  check_reshaper_shape(r);
  return reshape(f, r);
}

std::optional<BiPoly> compute_reshaper(const BiPoly& R, const PolyMatrix& popov,
                                       int eta, int delta) {
  if (delta < 1 || delta > eta) throw PreconditionError("compute_reshaper needs 0 < delta <= eta");
  if (R.deg_y() >= delta) return std::nullopt;
  const Field& F = popov.field();
  RowVec u = rem_popov_unchecked(phi_map(R, delta), popov);
  return y_power(F, eta) - phi_inv(F, u);
}

std::optional<BiPoly> compute_reshaper(const LexGB& G, int eta, int delta) {
  if (delta < 1 || delta > eta) throw PreconditionError("compute_reshaper needs 0 < delta <= eta");
  check_gb_shape(G.elements);
  const Field& F = G.elements.front().field();
  BiPoly R = rem_gb(y_power(F, eta), G.elements);
  if (R.deg_y() >= delta) return std::nullopt;
  auto popov = popov_form(gamma_module_basis(G, delta)).first;
  return compute_reshaper(R, popov, eta, delta);
}

BalanceReport balance_report(const Reshaper& r, long long n) {
  BalanceReport rep;
  rep.n = n;
  for (int i = 1; i <= r.seq.k(); ++i) {
    BalanceStep st;
    st.eta = r.seq[i];
    st.delta = r.seq.delta(i);
    st.degx = r.degx(i);
    st.bound = n / st.delta + 1;
    st.slack = st.bound - st.degx;
    if (st.slack < 0) rep.balanced = false;
    rep.steps.push_back(st);
  }
  return rep;
}

BalanceVerdict check_balanced(const BalanceReport& report) {
  BalanceVerdict v;
  v.balanced = report.balanced;
  for (const auto& st : report.steps) {
    if (st.slack < 0) v.balanced = false;
    v.aggregate += static_cast<long long>(st.eta) * st.degx;
  }
  if (!report.steps.empty())
    v.bound = (3 * report.n + report.steps.front().eta) *
              static_cast<long long>(report.steps.size());
  return v;
}

UniPoly powmod(const UniPoly& A, long long e, const UniPoly& M) {
  const Field& F = M.field();
  UniPoly base = uni_rem(A, M);
  UniPoly acc = uni_rem(UniPoly::constant(F, F.one()), M);
  while (e > 0) {
    if (e & 1) acc = uni_rem(uni_mul(acc, base), M);
    e >>= 1;
    if (e > 0) base = uni_rem(uni_mul(base, base), M);
  }
  return acc;
}

ReshaperBuild build_reshaper_pack(const PointSet& P, const ReshapingSequence& seq) {
  if (P.empty()) throw PreconditionError("empty point set");
  const Field& F = P.field();
  LexGB G = vanishing_gb(P);
  Reshaper r{seq, {}};
  // y^e rem G for e = 0 .. eta_1, one y-multiplication at a time.
  std::vector<BiPoly> ypow;
  ypow.push_back(rem_gb(y_power(F, 0), G.elements));
  const int top = seq.k() >= 1 ? seq[1] : 0;
  for (int e = 1; e <= top; ++e)
    ypow.push_back(rem_gb(mul_y_power(ypow.back(), 1), G.elements));
  for (int i = 1; i <= seq.k(); ++i) {
    const int eta = seq[i], delta = seq.delta(i);
    const BiPoly& R = ypow[eta];
    if (R.deg_y() >= delta) throw ReshaperFailure(i, eta, delta);
    auto g = compute_reshaper(R, gamma_popov_points(P, delta), eta, delta);
    r.g.push_back(*g);
  }
  ReshaperBuild out{std::move(r), {}};
  out.report = balance_report(out.reshaper, static_cast<long long>(P.size()));
  return out;
}

ReshaperBuild build_reshaper_pack(const UniPoly& M, const UniPoly& A,
                                  const ReshapingSequence& seq) {
  if (M.deg() < 1) throw PreconditionError("modulus must have positive degree");
  UniPoly Mm = make_monic(M);
  Reshaper r{seq, {}};
  int delta_max = 1;
  for (int i = 1; i <= seq.k(); ++i) delta_max = std::max(delta_max, seq.delta(i));
  const std::vector<PolyMatrix> chain = modcomp_popov_chain(Mm, A, delta_max);
  for (int i = 1; i <= seq.k(); ++i) {
    const int eta = seq[i], delta = seq.delta(i);
    BiPoly R = BiPoly::from_uni(powmod(A, eta, Mm));
    auto g = compute_reshaper(R, chain[delta - 1], eta, delta);
    if (!g) throw ReshaperFailure(i, eta, delta);
    r.g.push_back(*g);
  }
  ReshaperBuild out{std::move(r), {}};
  out.report = balance_report(out.reshaper, Mm.deg());
  return out;
}

}  // namespace bireshape
