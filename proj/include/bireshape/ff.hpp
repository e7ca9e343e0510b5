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

#pragma once

#include <cstdint>
#include <string>

namespace bireshape {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Element a0 + a1*t of F_p or F_p[t]/(t^2 - c). Base-field elements have
// a1 == 0.
struct Fe {
  u64 a0 = 0;
  u64 a1 = 0;

  friend bool operator==(const Fe&, const Fe&) = default;
};

enum class FieldOp { kAdd, kSub, kMul, kDiv, kInv, kNeg };

// F_p for an odd prime p < 2^63, optionally extended by a square root of a
// non-residue c. Immutable value type; copies compare equal.
class Field {
 public:
  Field() = default;

  static Field prime(u64 p);
  static Field extension(u64 p, u64 c);

  u64 p() const { return p_; }
  bool valid() const { return p_ != 0; }
  bool is_extension() const { return ext_; }
  u64 nonresidue() const { return c_; }
  // 2-adic valuation of p - 1.
  int ntt_order() const { return ntt_order_; }
  Field base() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.ext_ == b.ext_ && a.c_ == b.c_;
  }

  Fe zero() const { return {0, 0}; }
  Fe one() const { return {1, 0}; }
  Fe from_int(long long v) const;
  Fe theta() const;

  bool is_zero(Fe x) const { return x.a0 == 0 && x.a1 == 0; }
  bool in_base(Fe x) const { return x.a1 == 0; }
  bool is_canonical(Fe x) const {
    return x.a0 < p_ && x.a1 < p_ && (ext_ || x.a1 == 0);
  }

  // Base-field residue operations on canonical inputs.
  u64 add_mod(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub_mod(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg_mod(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * pinv_;
    u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  u64 mul_mod(u64 a, u64 b) const {
    return redc(static_cast<u128>(redc(static_cast<u128>(a) * b)) * r2_);
  }
  // Montgomery form of a: a * 2^64 mod p.
  u64 to_mont(u64 a) const { return redc(static_cast<u128>(a) * r2_); }
  u64 pow_mod(u64 a, u64 e) const;
  u64 inv_mod(u64 a) const;

  Fe add(Fe x, Fe y) const { return {add_mod(x.a0, y.a0), add_mod(x.a1, y.a1)}; }
  Fe sub(Fe x, Fe y) const { return {sub_mod(x.a0, y.a0), sub_mod(x.a1, y.a1)}; }
  Fe neg(Fe x) const { return {neg_mod(x.a0), neg_mod(x.a1)}; }
  Fe mul(Fe x, Fe y) const {
    if (!ext_) return {mul_mod(x.a0, y.a0), 0};
    u64 r0 = add_mod(mul_mod(x.a0, y.a0), mul_mod(c_, mul_mod(x.a1, y.a1)));
    u64 r1 = add_mod(mul_mod(x.a0, y.a1), mul_mod(x.a1, y.a0));
    return {r0, r1};
  }
  Fe inv(Fe x) const;
  Fe div(Fe x, Fe y) const { return mul(x, inv(y)); }
  Fe pow(Fe x, u64 e) const;

  // Validating entry point: rejects non-canonical operands with
  // ContextMismatch and zero divisors with ArithmeticError.
  Fe arith(FieldOp op, Fe x, Fe y = {}) const;

  // Base field embedded in this one, and back.
  Fe embed(Fe x) const { return {x.a0, 0}; }
  Fe project(Fe x) const;

  std::string format(Fe x) const;
  Fe parse(const std::string& s) const;

 private:
  u64 p_ = 0;
  u64 c_ = 0;
  bool ext_ = false;
  int ntt_order_ = 0;
  u64 pinv_ = 0;  // -p^{-1} mod 2^64
  u64 r2_ = 0;    // 2^128 mod p
};

bool is_prime_u64(u64 n);
bool is_square_mod(u64 a, u64 p);
Field build_quadratic_extension(const Field& base);

}  // namespace bireshape
