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

#include "cdu/walsh.hpp"

#include <string>

#include "cdu/error.hpp"
#include "cdu/simd/kernels.hpp"

namespace cdu::analysis {

PTable make_ptable(gf::FieldPtr ctx, std::vector<std::uint32_t> values) {
  if (values.size() != ctx->q()) throw Error(Errc::ShapeMismatch, "p-ary table length != q");
  for (auto v : values) {
    if (v >= ctx->p()) throw Error(Errc::InvalidElement, "p-ary value " + std::to_string(v) + " >= p");
  }
  return PTable{std::move(ctx), std::move(values)};
}

PTable component(const FunctionTable& table, gf::Elem u) {
  const auto& f = *table.ctx;
  std::vector<std::uint32_t> values(f.q());
  for (std::uint32_t i = 0; i < f.q(); ++i) values[i] = f.abs_trace(f.mul(u, gf::Elem{table.values[i]}));
  return PTable{table.ctx, std::move(values)};
}

std::uint32_t trace_mask(const gf::FieldCtx& ctx, gf::Elem v) {
  std::uint32_t mask = 0;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    if (ctx.abs_trace(ctx.mul(v, ctx.basis(i)))) mask |= 1u << i;
  }
  return mask;
}

cyc::CycInt walsh_coefficient(const PTable& f, gf::Elem v) {
  const auto& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  if (p == 2) {
    const auto w = simd::active().walsh_binary(f.values.data(), trace_mask(ctx, v), ctx.q());
    return cyc::CycInt::integer(2, w);
  }
  std::vector<std::uint32_t> tv(ctx.n());
  for (std::uint32_t j = 0; j < ctx.n(); ++j) tv[j] = ctx.abs_trace(ctx.mul(v, ctx.basis(j)));
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    std::uint64_t tr = 0;
    std::uint32_t x = i;
    for (std::uint32_t j = 0; j < ctx.n() && x; ++j) {
      tr += std::uint64_t(x % p) * tv[j];
      x /= p;
    }
    ++counts[(f.values[i] + p - tr % p) % p];
  }
  return cyc::CycInt::from_exponent_counts(p, counts);
}

std::vector<cyc::CycInt> walsh_spectrum(const PTable& f) {
  std::vector<cyc::CycInt> out;
  out.reserve(f.ctx->q());
  for (std::uint32_t v = 0; v < f.ctx->q(); ++v) out.push_back(walsh_coefficient(f, gf::Elem{v}));
  return out;
}

}  // namespace cdu::analysis
