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

#include <gtest/gtest.h>

#include <sstream>

#include "bireshape/errors.hpp"
#include "test_util.hpp"

namespace bireshape {
namespace {

using testing::I;
using testing::B;
using testing::P;
using testing::pts;
using testing::random_points;

const Field F7 = Field::prime(7);
const Field F97 = Field::prime(97);

void expect_valid_gb(const LexGB& G, const PointSet& P) {
  std::string why;
  EXPECT_NO_THROW(check_gb_shape(G.elements));
  EXPECT_TRUE(is_reduced_gb(G.elements, &why)) << why;
  for (const BiPoly& b : G.elements) EXPECT_TRUE(vanishes_on(b, P));
  EXPECT_EQ(G.elements.back().deg_y(), x_valency(P));
  EXPECT_TRUE(G.elements.back().lc_y().is_monic());
  EXPECT_EQ(G.elements.back().lc_y().deg(), 0);
}

TEST(PointSetTest, RejectsDuplicates) {
  EXPECT_THROW(pts(F7, {{1, 2}, {1, 2}}), DistinctnessError);
}

TEST(ValencyTest, Examples) {
  EXPECT_EQ(x_valency(pts(F7, {{0, 0}, {1, 1}})), 1);
  EXPECT_EQ(x_valency(pts(F7, {{0, 0}, {0, 1}})), 2);
  PointSet p3 = pts(F7, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(x_valency(p3), 2);
  EXPECT_EQ(y_valency(p3), 2);
  EXPECT_EQ(x_valency(PointSet(F7, {})), 0);
}

TEST(VanishingGbTest, TwoPointsDistinctX) {
  PointSet p = pts(F7, {{0, 0}, {1, 1}});
  LexGB G = vanishing_gb(p);
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], B(F7, {{0, 6, 1}}));
  EXPECT_EQ(G.elements[1], B(F7, {{0, 6}, {1}}));
  expect_valid_gb(G, p);
  EXPECT_EQ(degdet_check(gamma_module_basis(G, 2)), 2);
}

TEST(VanishingGbTest, TwoPointsSameX) {
  PointSet p = pts(F7, {{0, 0}, {0, 1}});
  LexGB G = vanishing_gb(p);
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], B(F7, {{0, 1}}));
  EXPECT_EQ(G.elements[1], B(F7, {{}, {6}, {1}}));
  expect_valid_gb(G, p);
  EXPECT_EQ(degdet_check(gamma_module_basis(G, 3)), 2);
}

TEST(VanishingGbTest, SinglePoint) {
  LexGB G = vanishing_gb(pts(F7, {{3, 5}}));
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], B(F7, {{4, 1}}));
  EXPECT_EQ(G.elements[1], B(F7, {{2}, {1}}));
}

TEST(VanishingGbTest, GenericPathMatchesDistinctXShortcut) {
  SplitMix64 rng(1);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + rng.below(12);
    std::vector<Point> v;
    std::vector<Fe> xs = testing::distinct_elements(F97, rng, n);
    for (const Fe& x : xs) v.push_back({x, rng.element(F97)});
    PointSet p(F97, v);
    LexGB fast = vanishing_gb(p);
    Shift s = {0, static_cast<long long>(n)};
    PolyMatrix W = point_insertion_basis(p, 2, s);
    normalize_popov_inplace(W, s);
    ASSERT_EQ(W(0, 1), UniPoly(F97));
    EXPECT_EQ(phi_inv(F97, W.row(0)), fast.elements[0]);
    EXPECT_EQ(phi_inv(F97, W.row(1)), fast.elements[1]);
  }
}

TEST(VanishingGbTest, RandomSetsAreValid) {
  SplitMix64 rng(2);
  for (int t = 0; t < 50; ++t) {
    PointSet p = random_points(F97, rng, 1 + rng.below(30), 5, 20);
    LexGB G = vanishing_gb(p);
    expect_valid_gb(G, p);
    int nux = x_valency(p);
    for (int delta : {nux + 1, nux + 2}) {
      EXPECT_EQ(degdet_check(gamma_module_basis(G, delta)),
                static_cast<long long>(p.size()));
    }
  }
}

TEST(VanishingGbTest, InsertionOrderIrrelevant) {
  SplitMix64 rng(3);
  PointSet p = random_points(F97, rng, 15, 4, 30);
  std::vector<Point> rev(p.points().rbegin(), p.points().rend());
  EXPECT_EQ(vanishing_gb(p).elements, vanishing_gb(PointSet(F97, rev)).elements);
}

TEST(VanishingGbTest, MembershipMatchesEvaluation) {
  SplitMix64 rng(4);
  for (int t = 0; t < 40; ++t) {
    PointSet p = random_points(F97, rng, 1 + rng.below(6), 3, 3);
    LexGB G = vanishing_gb(p);
    for (int k = 0; k < 10; ++k) {
      // Half the samples are built to vanish on P.
      BiPoly f(F97);
      for (int j = 0; j <= 4; ++j) {
        f = f + BiPoly::monomial(F97, rng.element(F97), static_cast<int>(rng.range(0, 4)),
                                 static_cast<int>(rng.range(0, 4)));
      }
      if (k % 2) f = f - rem_gb(f, G.elements);
      bool zero = rem_gb(f, G.elements).is_zero();
      EXPECT_EQ(zero, vanishes_on(f, p));
    }
  }
}

TEST(GammaModuleTest, Examples) {
  LexGB G{{B(F7, {{0, 6, 1}}), B(F7, {{0, 6}, {1}})}, true, true};
  PolyMatrix M2 = gamma_module_basis(G, 2);
  EXPECT_EQ(M2(0, 0), P(F7, {0, 6, 1}));
  EXPECT_TRUE(M2(0, 1).is_zero());
  EXPECT_EQ(M2(1, 0), P(F7, {0, 6}));
  EXPECT_EQ(M2(1, 1), P(F7, {1}));
  EXPECT_EQ(degdet_check(M2), 2);

  LexGB one{{B(F7, {{4, 1}}), B(F7, {{2}, {1}})}, true, true};
  PolyMatrix M1 = gamma_module_basis(one, 1);
  ASSERT_EQ(M1.rows(), 1u);
  EXPECT_EQ(M1(0, 0), P(F7, {4, 1}));

  LexGB G3{{B(F7, {{0, 1}}), B(F7, {{}, {6}, {1}})}, true, true};
  PolyMatrix M3 = gamma_module_basis(G3, 3);
  ASSERT_EQ(M3.rows(), 3u);
  EXPECT_EQ(phi_inv(F7, M3.row(0)), B(F7, {{0, 1}}));
  EXPECT_EQ(phi_inv(F7, M3.row(1)), B(F7, {{}, {0, 1}}));
  EXPECT_EQ(phi_inv(F7, M3.row(2)), B(F7, {{}, {6}, {1}}));
  EXPECT_EQ(degdet_check(M3), 2);
  EXPECT_THROW(gamma_module_basis(G3, 0), PreconditionError);
}

TEST(ModcompBasisTest, Examples) {
  auto [G, B2] = modcomp_basis(P(F7, {6, 0, 1}), P(F7, {0, 1}), 2);
  EXPECT_EQ(G.elements[0], B(F7, {{6, 0, 1}}));
  EXPECT_EQ(G.elements[1], B(F7, {{0, 6}, {1}}));
  EXPECT_EQ(B2(0, 0), P(F7, {6, 0, 1}));
  EXPECT_TRUE(B2(0, 1).is_zero());
  EXPECT_EQ(B2(1, 0), P(F7, {0, 6}));
  EXPECT_EQ(B2(1, 1), P(F7, {1}));
  auto [G1, B1] = modcomp_basis(P(F7, {6, 0, 1}), P(F7, {0, 1}), 1);
  ASSERT_EQ(B1.rows(), 1u);
  EXPECT_EQ(B1(0, 0), P(F7, {6, 0, 1}));
  EXPECT_THROW(modcomp_basis(UniPoly(F7), P(F7, {1}), 1), PreconditionError);
}

TEST(ModcompBasisTest, ChainMatchesDirectPopov) {
  SplitMix64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng.below(40));
    UniPoly M = testing::random_uni(F97, rng, n);
    UniPoly A = testing::random_uni(F97, rng, static_cast<int>(rng.below(2 * n)));
    const int dmax = 1 + static_cast<int>(rng.below(8));
    auto chain = modcomp_popov_chain(M, A, dmax);
    ASSERT_EQ(chain.size(), static_cast<std::size_t>(dmax));
    for (int d = 1; d <= dmax; ++d)
      EXPECT_EQ(chain[d - 1], popov_form(modcomp_basis(M, A, d).second).first) << n << " " << d;
  }
  EXPECT_THROW(modcomp_popov_chain(P(F7, {1}), P(F7, {1}), 2), PreconditionError);
}

TEST(ModcompBasisTest, NormalizesInputs) {
  // 2x^2 + 5 made monic; A of higher degree reduced.
  auto [G, Bm] = modcomp_basis(P(F7, {5, 0, 2}), P(F7, {0, 0, 0, 1}), 3);
  EXPECT_TRUE(G.elements[0].lc_y().is_monic());
  EXPECT_LT(G.elements[1].coeff(0).deg(), 2);
  SplitMix64 rng(5);
  for (int delta = 1; delta <= 6; ++delta) {
    UniPoly M = testing::random_uni(F97, rng, 9), A = testing::random_uni(F97, rng, 5);
    EXPECT_EQ(degdet_check(modcomp_basis(M, A, delta).second), 9);
  }
}

TEST(GammaPopovTest, PointInsertionMatchesGenericPopov) {
  SplitMix64 rng(6);
  for (int t = 0; t < 30; ++t) {
    PointSet p = random_points(F97, rng, 1 + rng.below(20), 6, 20);
    LexGB G = vanishing_gb(p);
    for (int delta = 1; delta <= x_valency(p) + 3; ++delta) {
      PolyMatrix generic = popov_form(gamma_module_basis(G, delta)).first;
      ASSERT_EQ(gamma_popov_points(p, delta), generic) << "delta " << delta;
    }
  }
}

TEST(PointFormatTest, RoundTrip) {
  PointSet p = pts(F7, {{1, 2}, {3, 4}});
  std::istringstream in(format_points(p));
  EXPECT_EQ(read_points(F7, in).points(), p.points());
  LexGB G = vanishing_gb(p);
  std::istringstream gin(format_gb(G));
  EXPECT_EQ(read_gb(F7, gin).elements, G.elements);
}

}  // namespace
}  // namespace bireshape
