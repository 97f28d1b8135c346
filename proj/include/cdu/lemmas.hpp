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
#include <optional>

#include "cdu/field.hpp"

namespace cdu::solvers {

struct Lemma2Count {
  /// Solutions with Tr_m^{3m}((1 + c) X) = 0.
  std::uint64_t restricted = 0;
  /// Solutions without the trace restriction.
  std::uint64_t unrestricted = 0;
};

/// Counts X in F_{2^{3m}} with
///   ((1+c)X)^{2^{-1}} + (1+c)(1+Tr_m^{3m}(delta))X + (a^{2^{2m}} + a^{2^m}) Tr_m^{3m}(X) = 0.
/// Requires Tr_m^{3m}(delta) != 1 and c outside F_{2^m} (PreconditionViolation).
Lemma2Count lemma2s1_count(gf::FieldPtr ctx, gf::Elem c, gf::Elem delta, gf::Elem a);

/// Same count by scanning every X; test oracle.
Lemma2Count lemma2s1_brute(const gf::FieldCtx& ctx, gf::Elem c, gf::Elem delta, gf::Elem a);

struct AbWitness {
  gf::Elem a;
  gf::Elem d;
  gf::Elem A;
  gf::Elem B;
};

/// A and B of the witness lemma for (c, a) over F_{p^{2m}}.
gf::Elem lemab_A(const gf::FieldCtx& ctx, gf::Elem c, gf::Elem a);
gf::Elem lemab_B(const gf::FieldCtx& ctx, gf::Elem c, gf::Elem a);

/// Some a and nonzero d with A + B d^{p-1} = 0, trying a = x(1 - c) for
/// x in F_{p^m}^* before a full scan. Requires c outside F_{p^m}
/// (PreconditionViolation); WitnessNotFound if the scan is exhausted.
AbWitness lemab_witness(gf::FieldPtr ctx, gf::Elem c);

}  // namespace cdu::solvers
