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

#include "cdu/linearized.hpp"

#include <algorithm>

#include "cdu/error.hpp"

namespace cdu::solvers {

namespace {

gf::Elem from_vector(const gf::FieldCtx& ctx, const std::vector<std::uint32_t>& v) { return ctx.from_digits(v); }

}  // namespace

LinearizedPoly::LinearizedPoly(gf::FieldPtr field) : ctx(std::move(field)), coeffs(ctx->n()) {}

LinearizedPoly& LinearizedPoly::add_term(std::uint64_t i, gf::Elem c) {
  auto& slot = coeffs[i % ctx->n()];
  slot = ctx->add(slot, c);
  return *this;
}

gf::Elem LinearizedPoly::operator()(gf::Elem x) const {
  gf::Elem r{};
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].v != 0) r = ctx->add(r, ctx->mul(coeffs[i], ctx->frobenius(x, i)));
  }
  return r;
}

LinearizedPoly quadratic_associate(gf::FieldPtr ctx, const std::vector<gf::Elem>& a) {
  LinearizedPoly l(ctx);
  const std::uint32_t n = ctx->n();
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    l.add_term(i, a[i]);
    const std::uint32_t back = (n - i % n) % n;
    l.add_term(back, ctx->frobenius(a[i], back));
  }
  return l;
}

FpMatrix matrix_of(const gf::FieldCtx& ctx, const std::function<gf::Elem(gf::Elem)>& map) {
  FpMatrix m(ctx.n(), ctx.n(), ctx.p());
  for (std::uint32_t j = 0; j < ctx.n(); ++j) {
    const auto d = ctx.digits(map(ctx.basis(j)));
    for (std::uint32_t i = 0; i < ctx.n(); ++i) m.at(i, j) = d[i];
  }
  return m;
}

FpMatrix matrix_of(const LinearizedPoly& l) {
  return matrix_of(*l.ctx, [&](gf::Elem x) { return l(x); });
}

Kernel joint_kernel(const std::vector<LinearizedPoly>& maps) {
  if (maps.empty()) throw Error(Errc::PreconditionViolation, "joint kernel of no maps");
  const auto& ctx = *maps.front().ctx;
  FpMatrix m = matrix_of(maps.front());
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].ctx.get() != maps.front().ctx.get()) throw Error(Errc::ShapeMismatch, "maps on different fields");
    m = m.stacked(matrix_of(maps[i]));
  }
  Kernel k;
  for (const auto& v : kernel_basis(m)) k.basis.push_back(from_vector(ctx, v));
  k.dim = static_cast<std::uint32_t>(k.basis.size());
  return k;
}

Kernel linearized_kernel(const LinearizedPoly& l) { return joint_kernel({l}); }

std::vector<gf::Elem> span(const gf::FieldCtx& ctx, const std::vector<gf::Elem>& basis) {
  std::vector<gf::Elem> out{ctx.zero()};
  for (const auto& b : basis) {
    const std::size_t size = out.size();
    for (std::uint32_t k = 1; k < ctx.p(); ++k) {
      const gf::Elem kb = ctx.scale(k, b);
      for (std::size_t i = 0; i < size; ++i) out.push_back(ctx.add(out[i], kb));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<gf::Elem> solve_affine(const LinearizedPoly& l, gf::Elem rhs) {
  const auto& ctx = *l.ctx;
  const FpMatrix m = matrix_of(l);
  const auto particular = solve(m, ctx.digits(rhs));
  if (!particular) return {};
  const gf::Elem x0 = from_vector(ctx, *particular);
  const Kernel k = linearized_kernel(l);
  std::vector<gf::Elem> out;
  for (const auto& z : span(ctx, k.basis)) {
    const gf::Elem x = ctx.add(x0, z);
    if (l(x) != rhs) throw Error(Errc::PreconditionViolation, "affine solution failed substitution");
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cdu::solvers
