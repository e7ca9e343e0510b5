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

#include <cctype>
#include <string>

#include "bireshape/errors.hpp"

namespace bireshape {
namespace {

u64 mulmod_slow(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_slow(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_slow(r, a, m);
    a = mulmod_slow(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static const u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod_slow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_slow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_square_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return true;
  return powmod_slow(a, (p - 1) / 2, p) == 1;
}

Field Field::prime(u64 p) {
  if (p < 3 || (p & 1) == 0 || p >= (u64{1} << 63) || !is_prime_u64(p)) {
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not an odd prime below 2^63");
  }
  Field f;
  f.p_ = p;
  u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  f.pinv_ = ~inv + 1;
  u128 r = (static_cast<u128>(1) << 64) % p;
  f.r2_ = static_cast<u64>(r * r % p);
  u64 q = p - 1;
  while ((q & 1) == 0) {
    q >>= 1;
    ++f.ntt_order_;
  }
  return f;
}

Field Field::extension(u64 p, u64 c) {
  Field f = prime(p);
  c %= p;
  if (is_square_mod(c, p)) {
    throw PreconditionError(std::to_string(c) + " is a square mod " +
                            std::to_string(p));
  }
  f.ext_ = true;
  f.c_ = c;
  return f;
}

Field Field::base() const {
  Field f = *this;
  f.ext_ = false;
  f.c_ = 0;
  return f;
}

Fe Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return {static_cast<u64>(r), 0};
}

Fe Field::theta() const {
  if (!ext_) throw ContextMismatch("theta requested in a prime field");
  return {0, 1};
}

u64 Field::pow_mod(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv_mod(u64 a) const {
  if (a == 0) throw ArithmeticError("inverse of zero");
  // Extended Euclid on signed 128-bit cofactors.
  __int128 t = 0, nt = 1;
  u64 r = p_, nr = a;
  while (nr != 0) {
    u64 q = r / nr;
    __int128 tmp = t - static_cast<__int128>(q) * nt;
    t = nt;
    nt = tmp;
    u64 tr = r - q * nr;
    r = nr;
    nr = tr;
  }
  if (t < 0) t += p_;
  return static_cast<u64>(t);
}

Fe Field::inv(Fe x) const {
  if (is_zero(x)) throw ArithmeticError("inverse of zero");
  if (!ext_ || x.a1 == 0) return {inv_mod(x.a0), 0};
  // (a0 + a1 t)^{-1} = (a0 - a1 t) / (a0^2 - c a1^2)
  u64 n = sub_mod(mul_mod(x.a0, x.a0), mul_mod(c_, mul_mod(x.a1, x.a1)));
  u64 ni = inv_mod(n);
  return {mul_mod(x.a0, ni), mul_mod(neg_mod(x.a1), ni)};
}

Fe Field::pow(Fe x, u64 e) const {
  Fe r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fe Field::arith(FieldOp op, Fe x, Fe y) const {
  if (!is_canonical(x) || !is_canonical(y)) {
    throw ContextMismatch("operand is not a canonical element of F_" +
                          std::to_string(p_) + (ext_ ? "^2" : ""));
  }
  switch (op) {
    case FieldOp::kAdd:
      return add(x, y);
    case FieldOp::kSub:
      return sub(x, y);
    case FieldOp::kMul:
      return mul(x, y);
    case FieldOp::kDiv:
      if (is_zero(y)) throw ArithmeticError("division by zero");
      return div(x, y);
    case FieldOp::kInv:
      return inv(x);
    case FieldOp::kNeg:
      return neg(x);
  }
  return zero();
}

Fe Field::project(Fe x) const {
  if (x.a1 != 0) {
    throw ContextMismatch("element " + format(x) + " is not in the base field");
  }
  return {x.a0, 0};
}

std::string Field::format(Fe x) const {
  std::string s = std::to_string(x.a0);
  if (x.a1 != 0) s += "+" + std::to_string(x.a1) + "*t";
  return s;
}

Fe Field::parse(const std::string& s) const {
  auto bad = [&]() { return ParseError("bad field element '" + s + "'"); };
  auto read_uint = [&](size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw bad();
    }
    u128 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned>(s[i] - '0');
      if (v >= p_) throw bad();
      ++i;
    }
    return static_cast<u64>(v);
  };
  size_t i = 0;
  Fe x;
  x.a0 = read_uint(i);
  if (i == s.size()) return x;
  if (!ext_ || s[i] != '+') throw bad();
  ++i;
  x.a1 = read_uint(i);
  if (s.compare(i, std::string::npos, "*t") != 0) throw bad();
  return x;
}

Field build_quadratic_extension(const Field& base) {
  if (base.is_extension()) {
    throw PreconditionError("field is already a quadratic extension");
  }
  u64 c = 2;
  while (is_square_mod(c, base.p())) ++c;
  return Field::extension(base.p(), c);
}

}  // namespace bireshape
