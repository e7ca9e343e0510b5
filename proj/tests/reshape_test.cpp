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

#include <gtest/gtest.h>

#include <cmath>

#include "bireshape/errors.hpp"
#include "bireshape/oracle.hpp"
#include "test_util.hpp"

namespace bireshape {
namespace {

using testing::B;
using testing::I;
using testing::P;
using testing::pts;
using testing::random_bi;
using testing::random_points;
using testing::random_uni;

const Field F7 = Field::prime(7);
const Field F97 = Field::prime(97);
const Field Fbig = Field::prime(2013265921);

int degx0(const BiPoly& f) { return f.is_zero() ? 0 : std::max(0, f.deg_x()); }

void expect_sequence_ok(const ReshapingSequence& s, int a, int b, int valency) {
  std::string why;
  EXPECT_TRUE(ReshapingSequence::is_valid(s.eta(), &why)) << why;
  EXPECT_EQ(s.front(), a);
  EXPECT_EQ(s.back(), b);
  for (int i = 1; i <= s.k(); ++i) EXPECT_GE(s.delta(i), valency);
  EXPECT_LE(static_cast<double>(s.eta().size()), std::log(a) / std::log(1.5) + 2);
}

TEST(Sequence, Validity) {
  EXPECT_TRUE(ReshapingSequence::is_valid({9, 6, 4, 2, 1}));
  EXPECT_TRUE(ReshapingSequence::is_valid({9, 6, 4, 3, 2, 1}));
  EXPECT_FALSE(ReshapingSequence::is_valid({9, 5}));
  EXPECT_FALSE(ReshapingSequence::is_valid({3, 3}));
  EXPECT_FALSE(ReshapingSequence::is_valid({}));
  EXPECT_FALSE(ReshapingSequence::is_valid({2, 0}));
  EXPECT_THROW(ReshapingSequence({4, 1}), PreconditionError);
}

TEST(Sequence, MakeExamples) {
  // Greedy descent from 9: 9 -> 6 -> 4 -> 2 -> 1.
  auto s = make_sequence(9, 1, 1);
  EXPECT_EQ(s.eta(), (std::vector<int>{9, 6, 4, 2, 1}));
  expect_sequence_ok(s, 9, 1, 1);

  EXPECT_EQ(make_sequence(5, 5, 1).eta(), (std::vector<int>{5}));
  EXPECT_EQ(make_sequence(5, 5, 1).k(), 0);

  s = make_sequence(9, 2, 2);
  EXPECT_EQ(s.eta(), (std::vector<int>{9, 6, 4, 3, 2}));
  expect_sequence_ok(s, 9, 2, 2);

  EXPECT_THROW(make_sequence(3, 1, 2), PreconditionError);
  EXPECT_THROW(make_sequence(2, 3, 1), PreconditionError);
}

TEST(Sequence, MakeSweep) {
  for (int a = 1; a <= 200; ++a)
    for (int b = 1; b <= a; b += 3)
      for (int v = 1; v <= b; v += 2) expect_sequence_ok(make_sequence(a, b, v), a, b, v);
}

TEST(Sequence, Through) {
  auto [s, k1] = make_sequence_through(16, 4, 1, 1);
  expect_sequence_ok(s, 16, 1, 1);
  EXPECT_EQ(s[k1], 4);

  auto [s2, k2] = make_sequence_through(4, 4, 1, 1);
  EXPECT_EQ(s2, make_sequence(4, 1, 1));
  EXPECT_EQ(k2, 0);

  auto [s3, k3] = make_sequence_through(9, 4, 2, 2);
  expect_sequence_ok(s3, 9, 2, 2);
  EXPECT_EQ(s3[k3], 4);

  EXPECT_THROW(make_sequence_through(9, 10, 2, 1), PreconditionError);
  EXPECT_THROW(make_sequence_through(9, 1, 2, 1), PreconditionError);
}

TEST(Reshape, PointExample) {
  Reshaper r{ReshapingSequence({2, 1}), {B(F7, {{0, 6}, {1}})}};
  BiPoly f = B(F7, {{1}, {1}});
  BiPoly h = reshape(f, r);
  EXPECT_EQ(h, B(F7, {{1, 1}}));
  auto S = pts(F7, {{0, 0}, {1, 1}});
  EXPECT_EQ(naive_mpe(h, S), naive_mpe(f, S));
}

TEST(Reshape, ModcompExample) {
  Reshaper r{ReshapingSequence({2, 1}), {B(F7, {{0, 6}, {1}})}};
  BiPoly h = reshape(B(F7, {{0, 1}, {3}}), r);
  EXPECT_EQ(h, B(F7, {{0, 4}}));
  EXPECT_EQ(naive_modcomp(B(F7, {{0, 1}, {3}}), P(F7, {6, 0, 1}), P(F7, {0, 1})),
            P(F7, {0, 4}));
}

TEST(Reshape, LowDegreeUnchanged) {
  Reshaper r{ReshapingSequence({3, 2}), {B(F7, {{1}, {2}, {1}})}};
  BiPoly f = B(F7, {{1, 2, 3}, {4}});
  EXPECT_EQ(reshape(f, r), f);
  EXPECT_EQ(reshape(BiPoly(F7), r), BiPoly(F7));
}

TEST(Reshape, Errors) {
  Reshaper r{ReshapingSequence({2, 1}), {B(F7, {{0, 6}, {1}})}};
  EXPECT_THROW(reshape(B(F7, {{1}, {1}, {1}}), r), DegreeError);
  EXPECT_THROW(reshape(B(F7, {{1}}), ReshapingSequence({3, 2, 1}), {B(F7, {{0, 6}, {1}})}),
               PreconditionError);
  EXPECT_THROW(reshape(B(F7, {{1}}), ReshapingSequence({3, 2}), {B(F7, {{1}, {1}, {2}})}),
               PreconditionError);
}

TEST(ComputeReshaper, Examples) {
  LexGB G{{B(F7, {{0, 6, 1}}), B(F7, {{0, 6}, {1}})}, true, true};
  auto g = compute_reshaper(G, 1, 1);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, B(F7, {{0, 6}, {1}}));

  LexGB G2{{B(F7, {{0, 1}}), B(F7, {{}, {6}, {1}})}, true, true};
  EXPECT_FALSE(compute_reshaper(G2, 3, 1));

  LexGB G3{{B(F7, {{6, 0, 1}}), B(F7, {{0, 6}, {1}})}, true, true};
  g = compute_reshaper(G3, 2, 1);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, B(F7, {{6}, {}, {1}}));

  EXPECT_THROW(compute_reshaper(G3, 2, 3), PreconditionError);
  EXPECT_THROW(compute_reshaper(G3, 2, 0), PreconditionError);
}

TEST(ComputeReshaper, MinimalAgainstBruteForce) {
  SplitMix64 rng(11);
  int compared = 0, fails = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    auto S = random_points(F97, rng, n, 3, 4);
    LexGB G = vanishing_gb(S);
    for (int eta = 1; eta <= 4; ++eta)
      for (int delta = 1; delta <= eta; ++delta) {
        auto fast = compute_reshaper(G, eta, delta);
        auto brute = brute_min_reshaper(S, eta, delta, static_cast<int>(n));
        ASSERT_EQ(fast.has_value(), brute.has_value())
            << format_points(S) << " eta=" << eta << " delta=" << delta;
        if (!fast) {
          ++fails;
          continue;
        }
        ++compared;
        BiPoly ghat = BiPoly::monomial(F97, F97.one(), 0, eta) - *fast;
        EXPECT_LT(ghat.deg_y(), delta);
        EXPECT_EQ(ghat.deg_x(), brute->deg_x());
        EXPECT_TRUE(rem_gb(*fast, G.elements).is_zero());
      }
  }
  EXPECT_GT(compared, 0);
  EXPECT_GT(fails, 0);
}

TEST(BuildPack, PointExample) {
  auto b = build_reshaper_pack(pts(F7, {{0, 0}, {1, 1}}), ReshapingSequence({2, 1}));
  ASSERT_EQ(b.reshaper.g.size(), 1u);
  EXPECT_EQ(b.reshaper.g[0], B(F7, {{0, 6}, {1}}));
  ASSERT_EQ(b.report.steps.size(), 1u);
  EXPECT_EQ(b.report.steps[0].degx, 1);
  EXPECT_EQ(b.report.steps[0].bound, 3);
  EXPECT_EQ(b.report.steps[0].slack, 2);
  EXPECT_TRUE(b.report.balanced);
  auto v = check_balanced(b.report);
  EXPECT_TRUE(v.balanced);
  EXPECT_EQ(v.aggregate, 1);
  EXPECT_EQ(v.bound, 7);
}

TEST(BuildPack, ModcompExample) {
  auto b = build_reshaper_pack(P(F7, {6, 0, 1}), P(F7, {0, 1}), ReshapingSequence({2, 1}));
  ASSERT_EQ(b.reshaper.g.size(), 1u);
  EXPECT_EQ(b.reshaper.g[0], B(F7, {{0, 6}, {1}}));
  EXPECT_TRUE(b.report.balanced);
  EXPECT_EQ(b.report.steps[0].bound, 3);

  auto b3 = build_reshaper_pack(P(F7, {6, 0, 1}), P(F7, {0, 1}), ReshapingSequence({3, 2, 1}));
  EXPECT_EQ(b3.reshaper.g[0], B(F7, {{6}, {}, {1}}));
}

TEST(BuildPack, EmptySequence) {
  auto b = build_reshaper_pack(pts(F7, {{0, 0}, {1, 1}}), ReshapingSequence({3}));
  EXPECT_TRUE(b.reshaper.g.empty());
  auto v = check_balanced(b.report);
  EXPECT_TRUE(v.balanced);
  EXPECT_EQ(v.aggregate, 0);
}

TEST(BuildPack, FailureCarriesStep) {
  // Two points on one vertical line, step budget 1.
  try {
    build_reshaper_pack(pts(F7, {{0, 0}, {0, 1}}), ReshapingSequence({2, 1}));
    FAIL() << "expected ReshaperFailure";
  } catch (const ReshaperFailure& e) {
    EXPECT_EQ(e.step(), 1);
    EXPECT_EQ(e.eta(), 1);
    EXPECT_EQ(e.delta(), 1);
  }
}

TEST(CheckBalanced, UnbalancedStep) {
  BalanceReport rep;
  rep.n = 4;
  rep.steps.push_back({2, 1, 9, 5, -4});
  rep.balanced = false;
  EXPECT_FALSE(check_balanced(rep).balanced);
  rep.balanced = true;
  EXPECT_FALSE(check_balanced(rep).balanced);
}

TEST(Powmod, MatchesRemGb) {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    UniPoly M = make_monic(random_uni(F97, rng, 1 + static_cast<int>(rng.below(8))));
    UniPoly A = random_uni(F97, rng, static_cast<int>(rng.below(10)));
    auto [G, basis] = modcomp_basis(M, A, 1);
    for (int e = 0; e < 12; ++e)
      EXPECT_EQ(BiPoly::from_uni(powmod(A, e, M)),
                rem_gb(BiPoly::monomial(F97, F97.one(), 0, e), G.elements));
  }
}

TEST(Reshape, RandomPointsPreserveValues) {
  SplitMix64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(30);
    const int d = 1 + static_cast<int>(rng.below(8));
    std::vector<Fe> xs = testing::distinct_elements(Fbig, rng, n);
    std::vector<Point> v;
    for (const Fe& x : xs) v.push_back({x, rng.element(Fbig)});
    PointSet S(Fbig, v);
    auto b = build_reshaper_pack(S, make_sequence(d, 1, 1));
    for (int i = 1; i <= b.reshaper.seq.k(); ++i)
      EXPECT_TRUE(vanishes_on(b.reshaper.g[i - 1], S));
    BiPoly f = random_bi(Fbig, rng, static_cast<int>(rng.below(10)), d - 1);
    BiPoly h = reshape(f, b.reshaper);
    EXPECT_LT(h.deg_y(), 1);
    EXPECT_LE(degx0(h), degx0(f) + b.reshaper.total_degx());
    EXPECT_EQ(naive_mpe(h, S), naive_mpe(f, S));
  }
}

TEST(Reshape, RandomModcomp) {
  SplitMix64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(24));
    const int d = 1 + static_cast<int>(rng.below(8));
    UniPoly M = make_monic(random_uni(Fbig, rng, n));
    UniPoly A = random_uni(Fbig, rng, n - 1);
    auto b = build_reshaper_pack(M, A, make_sequence(d, 1, 1));
    BiPoly f = random_bi(Fbig, rng, static_cast<int>(rng.below(10)), d - 1);
    BiPoly h = reshape(f, b.reshaper);
    EXPECT_LT(h.deg_y(), 1);
    EXPECT_EQ(uni_rem(h.coeff(0), M), naive_modcomp(f, M, A));
  }
}

}  // namespace
}  // namespace bireshape
