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

#include "bireshape/ff.hpp"

#include <gtest/gtest.h>

#include "bireshape/errors.hpp"
#include "bireshape/rng.hpp"

namespace bireshape {
namespace {

TEST(FieldTest, InverseOfThreeModSeven) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.arith(FieldOp::kInv, f.from_int(3)), f.from_int(5));
}

TEST(FieldTest, AddWraps) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.arith(FieldOp::kAdd, f.from_int(6), f.from_int(3)), f.from_int(2));
}

TEST(FieldTest, ExtensionConjugateProduct) {
  Field f = Field::extension(7, 3);
  Fe a{1, 1}, b{1, 6};
  EXPECT_EQ(f.arith(FieldOp::kMul, a, b), f.from_int(5));
}

TEST(FieldTest, ZeroDivisionThrows) {
  Field f = Field::prime(7);
  EXPECT_THROW(f.arith(FieldOp::kInv, f.zero()), ArithmeticError);
  EXPECT_THROW(f.arith(FieldOp::kDiv, f.one(), f.zero()), ArithmeticError);
}

TEST(FieldTest, NonCanonicalOperandIsContextMismatch) {
  Field f = Field::prime(7);
  EXPECT_THROW(f.arith(FieldOp::kAdd, Fe{9, 0}, f.one()), ContextMismatch);
  EXPECT_THROW(f.arith(FieldOp::kAdd, Fe{1, 1}, f.one()), ContextMismatch);
}

TEST(FieldTest, RejectsBadModuli) {
  EXPECT_THROW(Field::prime(9), PreconditionError);
  EXPECT_THROW(Field::prime(2), PreconditionError);
  EXPECT_THROW(Field::extension(7, 2), PreconditionError);
}

TEST(FieldTest, SmallestNonResidue) {
  EXPECT_EQ(build_quadratic_extension(Field::prime(7)).nonresidue(), 3u);
  EXPECT_EQ(build_quadratic_extension(Field::prime(5)).nonresidue(), 2u);
  EXPECT_EQ(build_quadratic_extension(Field::prime(3)).nonresidue(), 2u);
  EXPECT_EQ(build_quadratic_extension(Field::prime(65537)).nonresidue(), 3u);
}

TEST(FieldTest, NonResidueAgreesWithSquareEnumeration) {
  for (u64 p : {3u, 5u, 7u, 11u, 13u, 17u, 97u}) {
    std::vector<bool> square(p, false);
    for (u64 x = 0; x < p; ++x) square[x * x % p] = true;
    u64 c = 1;
    while (square[c]) ++c;
    EXPECT_EQ(build_quadratic_extension(Field::prime(p)).nonresidue(), c) << p;
  }
}

TEST(FieldTest, NttOrder) {
  EXPECT_EQ(Field::prime(65537).ntt_order(), 16);
  EXPECT_EQ(Field::prime(2013265921).ntt_order(), 27);
  EXPECT_EQ(Field::prime(7).ntt_order(), 1);
}

TEST(FieldTest, RandomInverses) {
  for (u64 p : {65537ull, 2013265921ull, 4611686018427387847ull}) {
    Field f = Field::prime(p);
    Field e = build_quadratic_extension(f);
    SplitMix64 rng(p);
    for (int i = 0; i < 10000; ++i) {
      Fe x = rng.element(f);
      if (!f.is_zero(x)) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      Fe y = rng.element(e);
      if (!e.is_zero(y)) EXPECT_EQ(e.mul(y, e.inv(y)), e.one());
    }
  }
}

TEST(FieldTest, MontgomeryMatchesWideModulo) {
  Field f = Field::prime(4611686018427387847ull);
  SplitMix64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    u64 a = rng.below(f.p()), b = rng.below(f.p());
    u64 want = static_cast<u64>(static_cast<u128>(a) * b % f.p());
    ASSERT_EQ(f.mul_mod(a, b), want);
  }
}

TEST(FieldTest, EmbeddingRoundTrip) {
  Field e = build_quadratic_extension(Field::prime(97));
  for (long long v = 0; v < 97; ++v) {
    Fe x = e.base().from_int(v);
    EXPECT_EQ(e.project(e.embed(x)), x);
  }
  EXPECT_THROW(e.project(e.theta()), ContextMismatch);
}

TEST(FieldTest, ThetaIsOutsideBase) {
  Field e = build_quadratic_extension(Field::prime(7));
  EXPECT_NE(e.theta().a1, 0u);
  EXPECT_EQ(e.mul(e.theta(), e.theta()), e.from_int(3));
}

TEST(FieldTest, FormatParseRoundTrip) {
  Field e = Field::extension(7, 3);
  Fe x{4, 5};
  EXPECT_EQ(e.format(x), "4+5*t");
  EXPECT_EQ(e.parse("4+5*t"), x);
  EXPECT_EQ(e.parse("6"), e.from_int(6));
  EXPECT_THROW(e.parse("7"), ParseError);
  EXPECT_THROW(Field::prime(7).parse("1+1*t"), ParseError);
}

}  // namespace
}  // namespace bireshape
