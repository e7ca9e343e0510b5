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

#include "bireshape/ntt.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace bireshape {
namespace {

u64 find_root(const Field& f, int log_len) {
  u64 g = 2;
  while (is_square_mod(g, f.p())) ++g;
  // g is a non-residue, so g^((p-1)/2^k) has order exactly 2^k.
  return f.pow_mod(g, (f.p() - 1) >> log_len);
}

// Twiddles for every stage of a length-2^log_len transform, in Montgomery
// form: entry half + k is w_len^k for the stage of length 2 half.
const std::vector<u64>& twiddles(const Field& f, int log_len, bool inverse) {
  thread_local std::map<std::tuple<u64, int, bool>, std::vector<u64>> cache;
  auto [it, fresh] = cache.try_emplace({f.p(), log_len, inverse});
  if (!fresh) return it->second;
  const std::size_t n = std::size_t{1} << log_len;
  u64 w_n = find_root(f, log_len);
  if (inverse) w_n = f.inv_mod(w_n);
  std::vector<u64>& tw = it->second;
  tw.assign(std::max<std::size_t>(n, 2), 0);
  for (std::size_t half = 1; half < n; half <<= 1) {
    const u64 w_len = f.to_mont(f.pow_mod(w_n, n / (2 * half)));
    u64 w = f.to_mont(1);
    for (std::size_t k = 0; k < half; ++k) {
      tw[half + k] = w;
      w = f.redc(static_cast<u128>(w) * w_len);
    }
  }
  return tw;
}

// In-place iterative transform. Twiddles are kept in Montgomery form so
// one REDC per butterfly yields a canonical product.
void transform(const Field& f, std::vector<u64>& a, bool inverse) {
  const std::size_t n = a.size();
  const int log_n = std::countr_zero(n);
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const std::vector<u64>& tw = twiddles(f, log_n, inverse);
  for (std::size_t half = 1; half < n; half <<= 1) {
    const u64* roots = tw.data() + half;
    for (std::size_t i = 0; i < n; i += 2 * half) {
      for (std::size_t k = 0; k < half; ++k) {
        u64 u = a[i + k];
        u64 v = f.redc(static_cast<u128>(a[i + k + half]) * roots[k]);
        a[i + k] = f.add_mod(u, v);
        a[i + k + half] = f.sub_mod(u, v);
      }
    }
  }
  if (inverse) {
    u64 inv_n = f.to_mont(f.inv_mod(static_cast<u64>(n % f.p())));
    for (auto& x : a) x = f.redc(static_cast<u128>(x) * inv_n);
  }
}

}  // namespace

bool ntt_supports(const Field& f, std::size_t len) {
  if (len <= 1) return true;
  int need = std::bit_width(len - 1);
  return need <= f.ntt_order();
}

namespace {

std::vector<u64> plain_multiply(const Field& f, const std::vector<u64>& a,
                                const std::vector<u64>& b, std::size_t n) {
  const std::size_t out = a.size() + b.size() - 1;
  std::vector<u64> fa(n, 0), fb(n, 0);
  // Folding mod x^n - 1 keeps the cyclic product exact for operands longer than n.
  for (std::size_t i = 0; i < a.size(); ++i) fa[i % n] = f.add_mod(fa[i % n], a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i % n] = f.add_mod(fb[i % n], b[i]);
  transform(f, fa, false);
  transform(f, fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = f.mul_mod(fa[i], fb[i]);
  transform(f, fa, true);
  fa.resize(std::min(out, n));
  return fa;
}

}  // namespace

std::vector<u64> ntt_multiply(const Field& f, const std::vector<u64>& a,
                              const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out);
  const std::size_t half = n / 2;
  const std::size_t h = out - half;
  if (half < 64 || h > half / 4 || out == n) return plain_multiply(f, a, b, n);
  // Just above a power of two: a cyclic product of length half, corrected
  // by the top h coefficients, which only involve the top h terms of each
  // operand.
  const std::size_t oa = a.size() > h ? a.size() - h : 0;
  const std::size_t ob = b.size() > h ? b.size() - h : 0;
  std::vector<u64> at(a.begin() + oa, a.end()), bt(b.begin() + ob, b.end());
  std::vector<u64> top = ntt_multiply(f, at, bt);
  std::vector<u64> c = plain_multiply(f, a, b, half);
  c.resize(out, 0);
  for (std::size_t j = half; j < out; ++j) {
    c[j] = top[j - oa - ob];
    c[j - half] = f.sub_mod(c[j - half], c[j]);
  }
  return c;
}

}  // namespace bireshape
