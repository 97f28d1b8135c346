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

#include "cdu/cubic.hpp"

#include "cdu/error.hpp"

namespace cdu::solvers {

namespace {

gf::FieldPtr check_binary(gf::FieldPtr f) {
  if (f->p() != 2) throw Error(Errc::ShapeMismatch, "cubic criterion needs characteristic 2");
  return f;
}

}  // namespace

CubicSolver::CubicSolver(gf::FieldPtr ctx_m)
    : ctx_(check_binary(std::move(ctx_m))),
      ext_(gf::FieldCtx::build(2, 2 * ctx_->n())),
      embed_(ctx_, ext_) {}

CubicResult CubicSolver::solve(gf::Elem b1, gf::Elem b0) const {
  const auto& f = *ctx_;
  CubicResult r;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const gf::Elem u{i};
    const gf::Elem val = f.add(f.add(f.mul(f.mul(u, u), u), f.mul(b1, u)), b0);
    if (val.v == 0) r.roots.push_back(u);
  }
  r.b0_zero = b0.v == 0;
  if (r.b0_zero) return r;
  const gf::Elem b1cubed = f.mul(f.mul(b1, b1), b1);
  r.trace_condition = f.abs_trace(f.div(b1cubed, f.mul(b0, b0))) == f.abs_trace(f.one());

  // t^2 + b0 t + b1^3 = 0
  const bool m_even = f.n() % 2 == 0;
  const gf::FieldCtx& g = m_even ? f : *ext_;
  const gf::Elem gb0 = m_even ? b0 : embed_(b0);
  const gf::Elem gb1c = m_even ? b1cubed : embed_(b1cubed);
  std::vector<gf::Elem> ts;
  for (std::uint32_t i = 0; i < g.q(); ++i) {
    const gf::Elem t{i};
    if (g.add(g.add(g.mul(t, t), g.mul(gb0, t)), gb1c).v == 0) ts.push_back(t);
  }
  if (!ts.empty()) {
    bool all = true;
    for (auto t : ts) all = all && g.is_dth_power(t, 3);
    r.companion_cubes = all;
  }
  r.predicts_three = r.trace_condition && r.companion_cubes.value_or(false);
  return r;
}

CubicResult cubic_roots_char2(gf::FieldPtr ctx_m, gf::Elem b1, gf::Elem b0) {
  return CubicSolver(std::move(ctx_m)).solve(b1, b0);
}

}  // namespace cdu::solvers
