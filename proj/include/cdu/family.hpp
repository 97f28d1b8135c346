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
#include <string>
#include <string_view>

#include "cdu/field.hpp"
#include "cdu/function_table.hpp"

namespace cdu::families {

/// F(X) = (X^{p^m} +/- X + delta)^s + X with
///   B1: s = 2^{2m} + 1              over F_{2^{3m}}
///   B2: s = 2^{2m-1} + 2^{m-1}      over F_{2^{3m}}
///   B3: s = 2^{3m-1} + 2^{m-1}      over F_{2^{3m}}
///   T4: s = 3^{2m-1} + 2 * 3^{m-1}  over F_{3^{2m}}
///   P5: s = p^{m+1} + 1             over F_{p^{2m}}, p odd
enum class FamilyId { B1, B2, B3, T4, P5 };

std::string_view family_name(FamilyId id) noexcept;
/// "b1".."p5", case-insensitive (ParseError).
FamilyId parse_family(std::string_view text);

bool is_binary(FamilyId id) noexcept;
/// 3 for B1..B3, 2 for T4 and P5.
std::uint32_t degree_multiplier(FamilyId id) noexcept;
std::uint64_t family_exponent(FamilyId id, std::uint32_t p, std::uint32_t m);

/// Default-modulus field of the right shape for (id, p, m); p is ignored
/// except for P5.
gf::FieldPtr family_field(FamilyId id, std::uint32_t p, std::uint32_t m);

struct FamilyInstance {
  FamilyId id;
  gf::FieldPtr ctx;
  std::uint32_t m;
  gf::Elem delta;
  std::uint64_t s;
  /// Set when the parameters fall outside the stated hypotheses.
  bool outside_hypotheses = false;
  std::string hypothesis_note;
};

/// Theorem-side hypotheses: B2 needs m != 1 mod 3, B3 needs 2m != 1 mod 3,
/// T4 needs m even, P5 needs an admissible delta. An empty string means all hold.
std::string hypothesis_violation(FamilyId id, const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta);

/// Throws ShapeMismatch, and HypothesisViolation when strict.
FamilyInstance instantiate(FamilyId id, gf::FieldPtr ctx, std::uint32_t m, gf::Elem delta, bool strict);

gf::Elem evaluate(const FamilyInstance& inst, gf::Elem x);
/// Term-by-term expanded multinomial (B1, T4, P5; UnsupportedFamily otherwise).
gf::Elem evaluate_expanded(const FamilyInstance& inst, gf::Elem x);
/// Relative-trace rewrite (B2, B3; UnsupportedFamily otherwise).
gf::Elem evaluate_trace_form(const FamilyInstance& inst, gf::Elem x);
bool has_expansion(FamilyId id) noexcept;
bool has_trace_form(FamilyId id) noexcept;

/// T4 with Tr_m^{2m}(delta) = 0 collapses to X^{3^m} - delta^{3^m}
/// (PreconditionViolation for other instances).
gf::Elem t4_gamma0_reduction(const FamilyInstance& inst, gf::Elem x);

analysis::FunctionTable as_lut(const FamilyInstance& inst);

/// Odd-p admissibility predicates for delta over F_{p^{2m}}, with
/// t = Tr_m^{2m}(delta): t = 0, or t != 0 and (t + sign)/t is a (p-1)-th
/// power in F_{p^m} (zero counts as a (p-1)-th power).
bool p5_trace_zero(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta);
bool p5_power_branch(const gf::FieldCtx& ctx, std::uint32_t m, gf::Elem delta, int sign);

}  // namespace cdu::families
