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

#include "cdu/delta_class.hpp"

namespace cdu::harness {

std::string_view delta_class_name(DeltaClass c) noexcept {
  switch (c) {
    case DeltaClass::Gamma1: return "Gamma1";
    case DeltaClass::Gamma0: return "Gamma0";
    case DeltaClass::Complement: return "Complement";
  }
  return "?";
}

DeltaClass classify_delta(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta, families::FamilyId family) {
  const gf::Elem t = ctx.rel_trace(delta, m);
  if (t.v == 0) return DeltaClass::Gamma0;
  if (family == families::FamilyId::B1 && t == ctx.one()) return DeltaClass::Gamma1;
  return DeltaClass::Complement;
}

std::string_view c_class_name(CClass c) noexcept {
  switch (c) {
    case CClass::Subfield: return "subfield";
    case CClass::Outside: return "outside";
    case CClass::One: return "one";
  }
  return "?";
}

CClass classify_c(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem c) {
  if (c == ctx.one()) return CClass::One;
  return ctx.in_subfield(c, m) ? CClass::Subfield : CClass::Outside;
}

}  // namespace cdu::harness
