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

#include "cdu/family.hpp"

#include <cctype>
#include <string>

#include "cdu/error.hpp"

namespace cdu::families {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

void require_shape(FamilyId id, const gf::FieldCtx& f, std::uint32_t m) {
  if (m < 1) throw Error(Errc::ShapeMismatch, "m must be >= 1");
  const bool ok_p = is_binary(id) ? f.p() == 2 : id == FamilyId::T4 ? f.p() == 3 : f.p() != 2;
  if (!ok_p || f.n() != degree_multiplier(id) * m) {
    throw Error(Errc::ShapeMismatch, std::string(family_name(id)) + " with m=" + std::to_string(m) +
                                         " does not fit " + f.spec_string());
  }
}

}  // namespace

std::string_view family_name(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::B1: return "b1";
    case FamilyId::B2: return "b2";
    case FamilyId::B3: return "b3";
    case FamilyId::T4: return "t4";
    case FamilyId::P5: return "p5";
  }
  return "?";
}

FamilyId parse_family(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (auto id : {FamilyId::B1, FamilyId::B2, FamilyId::B3, FamilyId::T4, FamilyId::P5}) {
    if (s == family_name(id)) return id;
  }
  throw Error(Errc::ParseError, "unknown family '" + std::string(text) + "'");
}

bool is_binary(FamilyId id) noexcept { return id == FamilyId::B1 || id == FamilyId::B2 || id == FamilyId::B3; }

std::uint32_t degree_multiplier(FamilyId id) noexcept { return is_binary(id) ? 3 : 2; }

std::uint64_t family_exponent(FamilyId id, std::uint32_t p, std::uint32_t m) {
  switch (id) {
    case FamilyId::B1: return ipow(2, 2 * m) + 1;
    case FamilyId::B2: return ipow(2, 2 * m - 1) + ipow(2, m - 1);
    case FamilyId::B3: return ipow(2, 3 * m - 1) + ipow(2, m - 1);
    case FamilyId::T4: return ipow(3, 2 * m - 1) + 2 * ipow(3, m - 1);
    case FamilyId::P5: return ipow(p, m + 1) + 1;
  }
  return 0;
}

gf::FieldPtr family_field(FamilyId id, std::uint32_t p, std::uint32_t m) {
  const std::uint32_t prime = is_binary(id) ? 2 : id == FamilyId::T4 ? 3 : p;
  if (id == FamilyId::P5 && prime == 2) throw Error(Errc::ShapeMismatch, "p5 needs an odd prime");
  return gf::FieldCtx::build(prime, degree_multiplier(id) * m);
}

bool p5_trace_zero(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta) {
  return ctx.rel_trace(delta, m).v == 0;
}

bool p5_power_branch(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta, int sign) {
  const gf::Elem t = ctx.rel_trace(delta, m);
  if (t.v == 0) return false;
  const gf::Elem ratio = ctx.div(sign > 0 ? ctx.add(t, ctx.one()) : ctx.sub(t, ctx.one()), t);
  if (ratio.v == 0) return true;
  // y in F_{p^m}^* is a (p-1)-th power there iff y^((p^m-1)/(p-1)) = 1.
  const std::uint64_t sub_order = ipow(ctx.p(), m) - 1;
  return ctx.pow(ratio, sub_order / (ctx.p() - 1)) == ctx.one();
}

std::string hypothesis_violation(FamilyId id, const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta) {
  switch (id) {
    case FamilyId::B1:
      return {};
    case FamilyId::B2:
      return m % 3 == 1 ? "b2 requires m != 1 (mod 3)" : "";
    case FamilyId::B3:
      return (2 * m) % 3 == 1 ? "b3 requires 2m != 1 (mod 3)" : "";
    case FamilyId::T4:
      return m % 2 != 0 ? "t4 permutation guarantee requires even m" : "";
    case FamilyId::P5:
      if (p5_trace_zero(ctx, m, delta) || p5_power_branch(ctx, m, delta, -1)) return {};
      return "p5 requires Tr(delta) = 0 or (Tr(delta) - 1)/Tr(delta) a (p-1)-th power";
  }
  return {};
}

FamilyInstance instantiate(FamilyId id, gf::FieldPtr ctx, std::uint32_t m, gf::Elem delta, bool strict) {
  require_shape(id, *ctx, m);
  if (!ctx->valid(delta)) throw Error(Errc::InvalidElement, "delta out of range");
  FamilyInstance inst{id, ctx, m, delta, family_exponent(id, ctx->p(), m), false, {}};
  inst.hypothesis_note = hypothesis_violation(id, *ctx, m, delta);
  inst.outside_hypotheses = !inst.hypothesis_note.empty();
  if (strict && inst.outside_hypotheses) throw Error(Errc::HypothesisViolation, inst.hypothesis_note);
  return inst;
}

gf::Elem evaluate(const FamilyInstance& inst, gf::Elem x) {
  const auto& f = *inst.ctx;
  const gf::Elem xm = f.frobenius(x, inst.m);
  const gf::Elem inner = f.p() == 2 ? f.add(f.add(xm, x), inst.delta) : f.add(f.sub(xm, x), inst.delta);
  return f.add(f.pow(inner, inst.s), x);
}

bool has_expansion(FamilyId id) noexcept {
  return id == FamilyId::B1 || id == FamilyId::T4 || id == FamilyId::P5;
}

bool has_trace_form(FamilyId id) noexcept { return id == FamilyId::B2 || id == FamilyId::B3; }

gf::Elem evaluate_expanded(const FamilyInstance& inst, gf::Elem x) {
  const auto& f = *inst.ctx;
  const std::uint32_t m = inst.m;
  const gf::Elem d = inst.delta;
  auto fr = [&](gf::Elem y, std::uint32_t k) { return f.frobenius(y, k); };
  switch (inst.id) {
    case FamilyId::B1: {
      const gf::Elem x1 = fr(x, m), x2 = fr(x, 2 * m);
      const gf::Elem d2 = fr(d, 2 * m);
      gf::Elem r = f.mul(x2, x1);
      r = f.add(r, f.mul(x2, x));
      r = f.add(r, f.mul(x1, x));
      r = f.add(r, f.mul(d2, x1));
      r = f.add(r, f.mul(d, x2));
      r = f.add(r, f.mul(x, x));
      r = f.add(r, f.mul(f.add(f.add(d2, d), f.one()), x));
      return f.add(r, f.mul(d2, d));
    }
    case FamilyId::T4: {
      const gf::Elem xa = fr(x, m - 1), xb = fr(x, 2 * m - 1);
      const gf::Elem da = fr(d, m - 1), db = fr(d, 2 * m - 1);
      gf::Elem r = fr(x, m);
      r = f.add(r, f.mul(f.add(f.mul(da, da), f.mul(da, db)), f.sub(xa, xb)));
      const gf::Elem quad = f.add(f.add(f.mul(xa, xa), f.mul(xb, xb)), f.mul(xa, xb));
      r = f.add(r, f.mul(f.add(da, db), quad));
      return f.add(r, f.mul(db, f.mul(da, da)));
    }
    case FamilyId::P5: {
      const gf::Elem x1 = fr(x, 1), xm = fr(x, m), xm1 = fr(x, m + 1);
      const gf::Elem dm1 = fr(d, m + 1);
      gf::Elem r = f.mul(xm, x1);
      r = f.add(r, f.mul(xm1, x));
      r = f.sub(r, f.mul(x1, x));
      r = f.sub(r, f.mul(xm, xm1));
      r = f.add(r, f.mul(d, x1));
      r = f.sub(r, f.mul(d, xm1));
      r = f.add(r, f.mul(dm1, xm));
      r = f.add(r, f.mul(f.sub(f.one(), dm1), x));
      return f.add(r, f.mul(dm1, d));
    }
    default:
      throw Error(Errc::UnsupportedFamily, std::string(family_name(inst.id)) + " has no expanded form");
  }
}

gf::Elem evaluate_trace_form(const FamilyInstance& inst, gf::Elem x) {
  if (!has_trace_form(inst.id)) {
    throw Error(Errc::UnsupportedFamily, std::string(family_name(inst.id)) + " has no trace form");
  }
  const auto& f = *inst.ctx;
  const std::uint32_t m = inst.m;
  const gf::Elem d = inst.delta;
  const gf::Elem d1 = f.frobenius(d, m - 1);
  const gf::Elem xa = f.frobenius(x, m - 1), xb = f.frobenius(x, 2 * m - 1), xc = f.frobenius(x, 3 * m - 1);
  gf::Elem r = f.rel_trace(f.mul(xb, xa), m);
  if (inst.id == FamilyId::B2) {
    const gf::Elem d2 = f.frobenius(d, 2 * m - 1);
    r = f.add(r, f.frobenius(x, 2 * m));
    r = f.add(r, f.mul(d1, xc));
    r = f.add(r, f.mul(f.add(d1, d2), xb));
    r = f.add(r, f.mul(d2, xa));
    r = f.add(r, x);
    return f.add(r, f.mul(d1, d2));
  }
  const gf::Elem d3 = f.frobenius(d, 3 * m - 1);
  r = f.add(r, f.frobenius(x, m));
  r = f.add(r, f.mul(f.add(d1, d3), xa));
  r = f.add(r, f.mul(d1, xc));
  r = f.add(r, f.mul(d3, xb));
  r = f.add(r, f.mul(d1, d3));
  return f.add(r, x);
}

gf::Elem t4_gamma0_reduction(const FamilyInstance& inst, gf::Elem x) {
  const auto& f = *inst.ctx;
  if (inst.id != FamilyId::T4 || f.rel_trace(inst.delta, inst.m).v != 0) {
    throw Error(Errc::PreconditionViolation, "reduction applies to t4 with Tr(delta) = 0");
  }
  return f.sub(f.frobenius(x, inst.m), f.frobenius(inst.delta, inst.m));
}

analysis::FunctionTable as_lut(const FamilyInstance& inst) {
  return analysis::tabulate(inst.ctx, [&](gf::Elem x) { return evaluate(inst, x); });
}

}  // namespace cdu::families
