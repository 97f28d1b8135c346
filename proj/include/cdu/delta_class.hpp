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

#include "cdu/family.hpp"

namespace cdu::harness {

/// Gamma0: Tr_m^n(delta) = 0. Gamma1: Tr_m^n(delta) = 1, used by the B1
/// family only. Complement: everything else.
enum class DeltaClass { Gamma1, Gamma0, Complement };

std::string_view delta_class_name(DeltaClass c) noexcept;

/// Throws NonDivisorSubfieldDegree unless m | n.
DeltaClass classify_delta(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta, families::FamilyId family);

/// Subfield: c in F_{p^m} minus {1}. Outside: c not in F_{p^m}. One: c = 1.
enum class CClass { Subfield, Outside, One };

std::string_view c_class_name(CClass c) noexcept;
CClass classify_c(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem c);

}  // namespace cdu::harness
