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

#include <optional>
#include <vector>

#include "cdu/field.hpp"

namespace cdu::solvers {

struct CubicResult {
  std::vector<gf::Elem> roots;  // exhaustive, sorted
  bool b0_zero = false;
  /// Tr_1^m(b1^3 / b0^2) = Tr_1^m(1); false when b0 = 0.
  bool trace_condition = false;
  /// Roots of t^2 + b0 t + b1^3 are cubes in F_{2^m} (m even) or F_{2^{2m}}
  /// (m odd); unset when b0 = 0 or the roots are missing from that field.
  std::optional<bool> companion_cubes;
  /// trace_condition and companion_cubes both hold.
  bool predicts_three = false;
};

/// Roots of u^3 + b1 u + b0 over F_{2^m} together with the trace criterion.
class CubicSolver {
 public:
  /// ShapeMismatch unless p = 2.
  explicit CubicSolver(gf::FieldPtr ctx_m);
  CubicResult solve(gf::Elem b1, gf::Elem b0) const;
  const gf::FieldCtx& field() const noexcept { return *ctx_; }

 private:
  gf::FieldPtr ctx_;
  gf::FieldPtr ext_;  // F_{2^{2m}}
  gf::Embedding embed_;
};

CubicResult cubic_roots_char2(gf::FieldPtr ctx_m, gf::Elem b1, gf::Elem b0);

}  // namespace cdu::solvers
