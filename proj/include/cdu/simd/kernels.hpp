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

#pragma once

#include <cstdint>
#include <string_view>

namespace cdu::simd {

enum class Isa { Scalar, Avx2 };

/// One row of the c-derivative for p = 2:
/// out[x] = table[x ^ a] ^ mulc[table[x]].
using RowBinaryFn = void (*)(const std::uint32_t* table, const std::uint32_t* mulc, std::uint32_t a,
                             std::uint32_t q, std::uint32_t* out);

/// One row of the c-derivative for odd p through a dense addition table:
/// out[x] = add[table[shift[x]] * q + negmulc[table[x]]].
using RowOddFn = void (*)(const std::uint32_t* table, const std::uint32_t* shift,
                          const std::uint32_t* negmulc, const std::uint32_t* add, std::uint32_t q,
                          std::uint32_t* out);

/// sum over x < q of (-1)^(bits[x] ^ parity(x & mask)), bits[x] in {0, 1}.
using WalshBinaryFn = std::int64_t (*)(const std::uint32_t* bits, std::uint32_t mask, std::uint32_t q);

struct Kernels {
  Isa isa;
  RowBinaryFn row_binary;
  RowOddFn row_odd;
  WalshBinaryFn walsh_binary;
};

/// counts[out[x]] += 1 for x < q. Shared by every ISA.
void histogram(const std::uint32_t* out, std::uint32_t q, std::uint32_t* counts);

bool isa_available(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;
const Kernels& kernels(Isa isa);
/// Best available ISA, overridable with CDU_ISA=scalar|avx2.
const Kernels& active();

namespace detail {
extern const Kernels kScalar;
#if defined(CDU_HAVE_AVX2)
extern const Kernels kAvx2;
#endif
}  // namespace detail

}  // namespace cdu::simd
