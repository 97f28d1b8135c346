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
#include <vector>

#include "cdu/cycint.hpp"
#include "cdu/function_table.hpp"

namespace cdu::analysis {

/// A map F_q -> F_p given by values in [0, p).
struct PTable {
  gf::FieldPtr ctx;
  std::vector<std::uint32_t> values;
};

/// Validates length and range (ShapeMismatch, InvalidElement).
PTable make_ptable(gf::FieldPtr ctx, std::vector<std::uint32_t> values);

/// x -> Tr(u * F(x)).
PTable component(const FunctionTable& table, gf::Elem u);

/// Exact sum over x of w^(f(x) - Tr(v x)).
cyc::CycInt walsh_coefficient(const PTable& f, gf::Elem v);
std::vector<cyc::CycInt> walsh_spectrum(const PTable& f);

/// mask with bit i = Tr(v * X^i), so Tr(v x) = parity(x & mask) for p = 2.
std::uint32_t trace_mask(const gf::FieldCtx& ctx, gf::Elem v);

}  // namespace cdu::analysis
