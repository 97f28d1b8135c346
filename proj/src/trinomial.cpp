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

#include "cdu/trinomial.hpp"

#include <numeric>

#include "cdu/error.hpp"
#include "cdu/linearized.hpp"

namespace cdu::solvers {

namespace {

__extension__ using UInt = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// sum_{t=lo}^{hi} p^{k t} mod (q - 1).
std::uint64_t geometric(const gf::FieldCtx& f, std::uint32_t k, std::uint32_t lo, std::uint32_t hi) {
  const std::uint64_t mod = f.q() - 1;
  std::uint64_t s = 0;
  for (std::uint32_t t = lo; t <= hi; ++t) s = (s + powmod(f.p(), std::uint64_t{k} * t, mod)) % mod;
  return s;
}

// x^E where E = sum_{t=lo}^{hi} p^{kt} (empty sum when lo > hi gives x^0 = 1).
gf::Elem pow_geometric(const gf::FieldCtx& f, gf::Elem x, std::uint32_t k, std::uint32_t lo, std::uint32_t hi) {
  if (lo > hi) return f.one();
  if (x.v == 0) return f.zero();
  return f.pow(x, geometric(f, k, lo, hi));
}

}  // namespace

std::uint32_t TrinomialInstance::g() const { return std::gcd(ctx->n(), k); }
std::uint32_t TrinomialInstance::l() const { return ctx->n() / g(); }

gf::Elem TrinomialInstance::evaluate(gf::Elem z) const {
  return ctx->sub(ctx->sub(ctx->frobenius(z, k), ctx->mul(a, z)), b);
}

gf::Elem trinomial_alpha(const TrinomialInstance& t) {
  return pow_geometric(*t.ctx, t.a, t.k, 0, t.l() - 1);
}

gf::Elem trinomial_beta(const TrinomialInstance& t) {
  const auto& f = *t.ctx;
  const std::uint32_t r = t.l() - 1;
  gf::Elem beta{};
  for (std::uint32_t i = 0; i <= r; ++i) {
    const gf::Elem as = pow_geometric(f, t.a, t.k, i + 1, r);
    beta = f.add(beta, f.mul(as, f.frobenius(t.b, std::uint64_t{t.k} * i)));
  }
  return beta;
}

TrinomialResult trinomial_roots(const TrinomialInstance& t) {
  if (t.k == 0) throw Error(Errc::PreconditionViolation, "trinomial step k must be >= 1");
  const auto& f = *t.ctx;
  TrinomialResult res;
  res.alpha = trinomial_alpha(t);
  res.beta = trinomial_beta(t);
  res.predicts_empty = res.alpha == f.one() && res.beta.v != 0;
  if (t.l() > 1 && res.alpha != f.one()) {
    const gf::Elem z = f.div(res.beta, f.sub(f.one(), res.alpha));
    if (t.evaluate(z).v != 0) {
      throw Error(Errc::PreconditionViolation, "closed-form trinomial root failed substitution");
    }
    res.roots = {z};
    res.closed_form = true;
    return res;
  }
  LinearizedPoly l(t.ctx);
  l.add_term(t.k, f.one());
  l.add_term(0, f.neg(t.a));
  res.roots = solve_affine(l, t.b);
  for (auto z : res.roots) {
    if (t.evaluate(z).v != 0) throw Error(Errc::PreconditionViolation, "trinomial root failed substitution");
  }
  return res;
}

std::vector<gf::Elem> brute_force_roots(const TrinomialInstance& t) {
  std::vector<gf::Elem> out;
  for (std::uint32_t i = 0; i < t.ctx->q(); ++i) {
    if (t.evaluate(gf::Elem{i}).v == 0) out.emplace_back(i);
  }
  return out;
}

}  // namespace cdu::solvers
