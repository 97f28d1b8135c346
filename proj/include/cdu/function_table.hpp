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

#include "cdu/field.hpp"

namespace cdu::analysis {

/// Dense value table of a map F_q -> F_q: values[i] = F(elem(i)).
struct FunctionTable {
  gf::FieldPtr ctx;
  std::vector<std::uint32_t> values;

  gf::Elem at(gf::Elem x) const { return gf::Elem{values[x.v]}; }
};

/// Validates length and element range (ShapeMismatch, InvalidElement).
FunctionTable make_table(gf::FieldPtr ctx, std::vector<std::uint32_t> values);

template <class Fn>
FunctionTable tabulate(gf::FieldPtr ctx, Fn&& fn) {
  std::vector<std::uint32_t> values(ctx->q());
  for (std::uint32_t i = 0; i < ctx->q(); ++i) values[i] = fn(gf::Elem{i}).v;
  return make_table(std::move(ctx), std::move(values));
}

FunctionTable identity_table(gf::FieldPtr ctx);

bool is_permutation(const FunctionTable& table);

}  // namespace cdu::analysis
