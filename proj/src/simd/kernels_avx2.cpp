// Copyright 2026 The cdu Authors
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

#include <immintrin.h>

#include "cdu/simd/kernels.hpp"

namespace cdu::simd {

namespace {

void row_binary(const std::uint32_t* table, const std::uint32_t* mulc, std::uint32_t a, std::uint32_t q,
                std::uint32_t* out) {
  const auto* t = reinterpret_cast<const int*>(table);
  const auto* m = reinterpret_cast<const int*>(mulc);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i step = _mm256_set1_epi32(8);
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::uint32_t x = 0;
  for (; x + 8 <= q; x += 8) {
    const __m256i fx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + x));
    const __m256i fxa = _mm256_i32gather_epi32(t, _mm256_xor_si256(idx, va), 4);
    const __m256i cf = _mm256_i32gather_epi32(m, fx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_xor_si256(fxa, cf));
    idx = _mm256_add_epi32(idx, step);
  }
  for (; x < q; ++x) out[x] = table[x ^ a] ^ mulc[table[x]];
}

void row_odd(const std::uint32_t* table, const std::uint32_t* shift, const std::uint32_t* negmulc,
             const std::uint32_t* add, std::uint32_t q, std::uint32_t* out) {
  const auto* t = reinterpret_cast<const int*>(table);
  const auto* nm = reinterpret_cast<const int*>(negmulc);
  const auto* ad = reinterpret_cast<const int*>(add);
  const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
  std::uint32_t x = 0;
  for (; x + 8 <= q; x += 8) {
    const __m256i sh = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(shift + x));
    const __m256i fx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + x));
    const __m256i fxa = _mm256_i32gather_epi32(t, sh, 4);
    const __m256i cf = _mm256_i32gather_epi32(nm, fx, 4);
    const __m256i cell = _mm256_add_epi32(_mm256_mullo_epi32(fxa, vq), cf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_i32gather_epi32(ad, cell, 4));
  }
  for (; x < q; ++x) out[x] = add[std::size_t{table[shift[x]]} * q + negmulc[table[x]]];
}

std::int64_t walsh_binary(const std::uint32_t* bits, std::uint32_t mask, std::uint32_t q) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(mask));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i step = _mm256_set1_epi32(8);
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  __m256i acc = _mm256_setzero_si256();
  std::uint32_t x = 0;
  for (; x + 8 <= q; x += 8) {
    __m256i v = _mm256_and_si256(idx, vm);
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 16));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 8));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 4));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 2));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 1));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + x));
    acc = _mm256_add_epi32(acc, _mm256_and_si256(_mm256_xor_si256(v, b), one));
    idx = _mm256_add_epi32(idx, step);
  }
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t ones = 0;
  for (auto l : lanes) ones += l;
  for (; x < q; ++x) ones += (bits[x] ^ static_cast<std::uint32_t>(__builtin_parity(x & mask))) & 1u;
  return static_cast<std::int64_t>(q) - 2 * ones;
}

}  // namespace

namespace detail {
const Kernels kAvx2{Isa::Avx2, &row_binary, &row_odd, &walsh_binary};
}  // namespace detail

}  // namespace cdu::simd
