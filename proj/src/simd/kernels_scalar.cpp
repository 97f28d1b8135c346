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

#include "cdu/simd/kernels.hpp"

namespace cdu::simd {

namespace {

void row_binary(const std::uint32_t* table, const std::uint32_t* mulc, std::uint32_t a, std::uint32_t q,
                std::uint32_t* out) {
  for (std::uint32_t x = 0; x < q; ++x) out[x] = table[x ^ a] ^ mulc[table[x]];
}

void row_odd(const std::uint32_t* table, const std::uint32_t* shift, const std::uint32_t* negmulc,
             const std::uint32_t* add, std::uint32_t q, std::uint32_t* out) {
  for (std::uint32_t x = 0; x < q; ++x) {
    out[x] = add[std::size_t{table[shift[x]]} * q + negmulc[table[x]]];
  }
}

std::int64_t walsh_binary(const std::uint32_t* bits, std::uint32_t mask, std::uint32_t q) {
  std::int64_t ones = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    ones += (bits[x] ^ static_cast<std::uint32_t>(__builtin_parity(x & mask))) & 1u;
  }
  return static_cast<std::int64_t>(q) - 2 * ones;
}

}  // namespace

void histogram(const std::uint32_t* out, std::uint32_t q, std::uint32_t* counts) {
  for (std::uint32_t x = 0; x < q; ++x) ++counts[out[x]];
}

namespace detail {
const Kernels kScalar{Isa::Scalar, &row_binary, &row_odd, &walsh_binary};
}  // namespace detail

}  // namespace cdu::simd
