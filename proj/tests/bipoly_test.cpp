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

#include <gtest/gtest.h>

#include <sstream>

#include "bireshape/errors.hpp"
#include "test_util.hpp"

namespace bireshape {
namespace {

using testing::I;
using testing::P;

const Field F7 = Field::prime(7);
const Field F65537 = Field::prime(65537);

// Rows listed from y^0 upward.
BiPoly B(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<UniPoly> v;
  for (auto r : rows) v.push_back(P(f, r));
  return BiPoly(f, v);
}

BiPoly random_bi(const Field& f, SplitMix64& rng, int dx, int dy) {
  std::vector<UniPoly> v;
  for (int j = 0; j <= dy; ++j) v.push_back(testing::random_uni(f, rng, dx));
  return BiPoly(f, v);
}

BiPoly schoolbook(const BiPoly& f, const BiPoly& g) {
  const Field& fld = f.field();
  BiPoly r(fld);
  for (int j = 0; j <= f.deg_y(); ++j) {
    for (int i = 0; i <= f.coeff(j).deg(); ++i) {
      for (int l = 0; l <= g.deg_y(); ++l) {
        for (int k = 0; k <= g.coeff(l).deg(); ++k) {
          r = r + BiPoly::monomial(fld, fld.mul(f.term(i, j), g.term(k, l)),
                                   i + k, j + l);
        }
      }
    }
  }
  return r;
}

TEST(BiMulTest, DifferenceOfSquares) {
  BiPoly a = B(F7, {{0, 1}, {1}});  // y + x
  BiPoly b = B(F7, {{0, 6}, {1}});  // y + 6x
  EXPECT_EQ(a * b, B(F7, {{0, 0, 6}, {}, {1}}));
}

TEST(BiMulTest, IdentityAndZero) {
  BiPoly f = B(F7, {{1, 2}, {3}, {0, 0, 4}});
  EXPECT_EQ(f * B(F7, {{1}}), f);
  EXPECT_TRUE((f * BiPoly(F7)).is_zero());
}

TEST(BiMulTest, MatchesSchoolbook) {
  SplitMix64 rng(5);
  BiPoly f = random_bi(F65537, rng, 20, 20), g = random_bi(F65537, rng, 20, 20);
  EXPECT_EQ(bi_mul(f, g), schoolbook(f, g));
  BiPoly h = random_bi(F65537, rng, 3, 30), k = random_bi(F65537, rng, 17, 2);
  EXPECT_EQ(bi_mul(h, k), schoolbook(h, k));
}

TEST(YSplitTest, Examples) {
  auto [f1, f0] = y_split(B(F7, {{1}, {1}, {0, 1}}), 2);
  EXPECT_EQ(f1, B(F7, {{0, 1}}));
  EXPECT_EQ(f0, B(F7, {{1}, {1}}));

  BiPoly g = B(F7, {{1}, {2}});
  auto [g1, g0] = y_split(g, 5);
  EXPECT_TRUE(g1.is_zero());
  EXPECT_EQ(g0, g);

  auto [h1, h0] = y_split(B(F7, {{}, {}, {}, {1}}), 1);
  EXPECT_EQ(h1, B(F7, {{}, {}, {1}}));
  EXPECT_TRUE(h0.is_zero());
}

TEST(YSplitTest, Recombination) {
  SplitMix64 rng(6);
  for (int i = 0; i < 20; ++i) {
    BiPoly f = random_bi(F65537, rng, 5, 10);
    int eta = static_cast<int>(rng.range(0, 13));
    auto [f1, f0] = y_split(f, eta);
    EXPECT_LT(f0.deg_y(), eta);
    EXPECT_EQ(mul_y_power(f1, eta) + f0, f);
  }
}

TEST(ShearTest, Examples) {
  BiPoly xy = B(F7, {{}, {0, 1}});
  EXPECT_EQ(shear_poly(xy, I(F7, 1), I(F7, 2)), B(F7, {{}, {0, 1}, {2}}));
  BiPoly f = B(F7, {{1, 2}, {3, 4}, {5}});
  EXPECT_EQ(shear_poly(f, I(F7, 1), I(F7, 0)), f);
}

TEST(ShearTest, ExtensionSquare) {
  Field e = Field::extension(7, 3);
  BiPoly f(e, {UniPoly(e, {Fe{}, Fe{}, e.one()})});  // x^2
  BiPoly got = shear_poly(f, e.one(), e.neg(e.theta()));
  // x^2 - 2 t x y + 3 y^2
  BiPoly want(e, {UniPoly(e, {Fe{}, Fe{}, e.one()}),
                  UniPoly(e, {Fe{}, Fe{0, 5}}),
                  UniPoly(e, {e.from_int(3)})});
  EXPECT_EQ(got, want);
}

TEST(ShearTest, InverseAndEvaluation) {
  SplitMix64 rng(7);
  Field e = build_quadratic_extension(F65537);
  for (int i = 0; i < 10; ++i) {
    BiPoly f = random_bi(e, rng, 12, 9);
    Fe b = rng.element(e);
    BiPoly s = shear_poly(f, e.one(), b);
    EXPECT_LE(s.deg_x(), 12);
    EXPECT_LE(s.deg_y(), 21);
    EXPECT_EQ(shear_poly(s, e.one(), e.neg(b)), f);
    for (int k = 0; k < 5; ++k) {
      Fe x0 = rng.element(e), y0 = rng.element(e);
      EXPECT_EQ(bi_eval(s, x0, y0), bi_eval(f, e.add(x0, e.mul(b, y0)), y0));
    }
  }
}

TEST(BiEvalTest, Examples) {
  EXPECT_EQ(bi_eval(B(F7, {{0, 1}, {1}}), I(F7, 1), I(F7, 2)), I(F7, 3));
  EXPECT_EQ(bi_eval(BiPoly(F7), I(F7, 4), I(F7, 5)), I(F7, 0));
  EXPECT_EQ(bi_eval(B(F7, {{}, {}, {0, 1}}), I(F7, 2), I(F7, 3)), I(F7, 4));
}

TEST(TransposeTest, SwapsVariables) {
  SplitMix64 rng(8);
  BiPoly f = random_bi(F65537, rng, 6, 3);
  BiPoly t = transpose(f);
  Fe a = rng.element(F65537), b = rng.element(F65537);
  EXPECT_EQ(bi_eval(t, a, b), bi_eval(f, b, a));
  EXPECT_EQ(transpose(t), f);
}

TEST(RemGbTest, TwoPointIdeal) {
  std::vector<BiPoly> G = {B(F7, {{0, 6, 1}}), B(F7, {{0, 6}, {1}})};
  BiPoly r = rem_gb(B(F7, {{}, {}, {1}}), G);
  EXPECT_EQ(r, B(F7, {{0, 1}}));
  for (auto [a, b] : {std::pair{0, 0}, {1, 1}}) {
    EXPECT_EQ(bi_eval(r, I(F7, a), I(F7, b)),
              bi_eval(B(F7, {{}, {}, {1}}), I(F7, a), I(F7, b)));
  }
}

TEST(RemGbTest, AlreadyReduced) {
  std::vector<BiPoly> G = {B(F7, {{0, 6, 1}}), B(F7, {{0, 6}, {1}})};
  BiPoly f = B(F7, {{3, 5}});
  EXPECT_EQ(rem_gb(f, G), f);
}

TEST(RemGbTest, RepeatedXIdeal) {
  std::vector<BiPoly> G = {B(F7, {{0, 1}}), B(F7, {{}, {6}, {1}})};
  EXPECT_EQ(rem_gb(B(F7, {{}, {}, {}, {1}}), G), B(F7, {{}, {1}}));
}

TEST(RemGbTest, ShapeViolations) {
  BiPoly f = B(F7, {{1}});
  EXPECT_THROW(rem_gb(f, {}), PreconditionError);
  EXPECT_THROW(rem_gb(f, {B(F7, {{0, 6}, {1}})}), PreconditionError);
  EXPECT_THROW(rem_gb(f, {B(F7, {{0, 1}}), B(F7, {{0, 1}})}), PreconditionError);
  // LC_y = x + 1 does not divide x.
  EXPECT_THROW(rem_gb(f, {B(F7, {{0, 1}}), B(F7, {{}, {1, 1}})}),
               PreconditionError);
}

TEST(RemGbTest, Idempotent) {
  SplitMix64 rng(9);
  std::vector<BiPoly> G = {B(F7, {{0, 6, 1}}), B(F7, {{0, 6}, {1}})};
  for (int i = 0; i < 20; ++i) {
    BiPoly f(F7);
    for (int j = 0; j < 5; ++j) {
      f = f + BiPoly::monomial(F7, rng.element(F7), static_cast<int>(rng.range(0, 5)),
                               static_cast<int>(rng.range(0, 5)));
    }
    BiPoly r = rem_gb(f, G);
    EXPECT_EQ(rem_gb(r, G), r);
  }
}

TEST(BiFormatTest, RoundTrip) {
  BiPoly f = B(F7, {{1, 2}, {}, {0, 0, 4}});
  std::string s = format_bi(f);
  EXPECT_EQ(s, "ydeg 2\n1 1 2\n-1\n2 0 0 4\n");
  std::istringstream in(s);
  EXPECT_EQ(read_bi(F7, in), f);
  std::istringstream z(format_bi(BiPoly(F7)));
  EXPECT_TRUE(read_bi(F7, z).is_zero());
}

TEST(SplitComponentsTest, Recombines) {
  Field e = Field::extension(7, 3);
  BiPoly s(e, {UniPoly(e, {Fe{1, 2}, Fe{3, 0}}), UniPoly(e, {Fe{0, 5}})});
  auto [s1, s2] = split_components(s);
  BiPoly back = change_field(s1, e) +
                mul_uni(change_field(s2, e), UniPoly::constant(e, e.theta()));
  EXPECT_EQ(back, s);
}

}  // namespace
}  // namespace bireshape
