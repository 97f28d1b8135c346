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

#include "cdu/lemmas.hpp"

#include "cdu/error.hpp"
#include "cdu/linearized.hpp"

namespace cdu::solvers {

namespace {

std::uint32_t third(const gf::FieldCtx& f) {
  if (f.p() != 2 || f.n() % 3 != 0) throw Error(Errc::ShapeMismatch, "expected F_{2^{3m}}");
  return f.n() / 3;
}

std::uint32_t half(const gf::FieldCtx& f) {
  if (f.p() == 2 || f.n() % 2 != 0) throw Error(Errc::ShapeMismatch, "expected F_{p^{2m}} with p odd");
  return f.n() / 2;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Lemma2Count lemma2s1_count(gf::FieldPtr ctx, gf::Elem c, gf::Elem delta, gf::Elem a) {
  const auto& f = *ctx;
  const std::uint32_t m = third(f);
  if (f.rel_trace(delta, m) == f.one()) throw Error(Errc::PreconditionViolation, "requires Tr(delta) != 1");
  if (f.in_subfield(c, m)) throw Error(Errc::PreconditionViolation, "requires c outside F_{2^m}");
  const gf::Elem cp = f.add(f.one(), c);
  const gf::Elem coef_a = f.add(f.frobenius(a, 2 * m), f.frobenius(a, m));
  const gf::Elem coef_x = f.add(f.mul(cp, f.add(f.one(), f.rel_trace(delta, m))), coef_a);

  LinearizedPoly l1(ctx);
  l1.add_term(f.n() - 1, f.frobenius(cp, f.n() - 1));
  l1.add_term(0, coef_x);
  l1.add_term(m, coef_a);
  l1.add_term(2 * m, coef_a);

  LinearizedPoly l2(ctx);
  l2.add_term(0, cp);
  l2.add_term(m, f.frobenius(cp, m));
  l2.add_term(2 * m, f.frobenius(cp, 2 * m));

  Lemma2Count out;
  out.restricted = ipow(2, joint_kernel({l1, l2}).dim);
  out.unrestricted = ipow(2, linearized_kernel(l1).dim);
  return out;
}

Lemma2Count lemma2s1_brute(const gf::FieldCtx& f, gf::Elem c, gf::Elem delta, gf::Elem a) {
  const std::uint32_t m = third(f);
  const gf::Elem cp = f.add(f.one(), c);
  const gf::Elem coef_a = f.add(f.frobenius(a, 2 * m), f.frobenius(a, m));
  const gf::Elem mid = f.mul(cp, f.add(f.one(), f.rel_trace(delta, m)));
  Lemma2Count out;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const gf::Elem x{i};
    const gf::Elem cx = f.mul(cp, x);
    const gf::Elem lhs =
        f.add(f.add(f.frobenius(cx, f.n() - 1), f.mul(mid, x)), f.mul(coef_a, f.rel_trace(x, m)));
    if (lhs.v != 0) continue;
    ++out.unrestricted;
    if (f.rel_trace(cx, m).v == 0) ++out.restricted;
  }
  return out;
}

gf::Elem lemab_B(const gf::FieldCtx& f, gf::Elem c, gf::Elem a) {
  const std::uint32_t m = half(f);
  const gf::Elem gamma = f.sub(f.one(), c);
  const gf::Elem factor = f.sub(f.one(), f.div(gamma, f.frobenius(gamma, m)));
  return f.mul(f.sub(f.frobenius(a, m), a), factor);
}

gf::Elem lemab_A(const gf::FieldCtx& f, gf::Elem c, gf::Elem a) {
  const std::uint32_t m = half(f);
  const gf::Elem gamma = f.sub(f.one(), c);
  const gf::Elem factor = f.sub(f.one(), f.div(gamma, f.frobenius(gamma, m)));
  const gf::Elem diff = f.sub(f.frobenius(a, m), a);
  return f.frobenius(f.add(gamma, f.mul(f.frobenius(diff, 1), factor)), 1);
}

AbWitness lemab_witness(gf::FieldPtr ctx, gf::Elem c) {
  const auto& f = *ctx;
  const std::uint32_t m = half(f);
  if (f.in_subfield(c, m)) throw Error(Errc::PreconditionViolation, "requires c outside F_{p^m}");
  const gf::Elem gamma = f.sub(f.one(), c);
  auto attempt = [&](gf::Elem a) -> std::optional<AbWitness> {
    const gf::Elem A = lemab_A(f, c, a), B = lemab_B(f, c, a);
    if (A.v == 0 || B.v == 0) return std::nullopt;
    const gf::Elem target = f.neg(f.div(A, B));
    const auto d = f.dth_root(target, f.p() - 1);
    if (!d || d->v == 0) return std::nullopt;
    if (f.add(A, f.mul(B, f.pow(*d, f.p() - 1))).v != 0) {
      throw Error(Errc::PreconditionViolation, "witness failed substitution");
    }
    return AbWitness{a, *d, A, B};
  };
  for (auto x : f.subfield_elements(m)) {
    if (x.v == 0) continue;
    if (auto w = attempt(f.mul(x, gamma))) return *w;
  }
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    if (auto w = attempt(gf::Elem{i})) return *w;
  }
  throw Error(Errc::WitnessNotFound, "no (a, d) for c = " + f.to_string(c));
}

}  // namespace cdu::solvers
