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

namespace cdu::solvers {

/// f(z) = z^{p^k} - a z - b over F_{p^n}; g = gcd(n, k), l = n / g.
struct TrinomialInstance {
  gf::FieldPtr ctx;
  std::uint32_t k;
  gf::Elem a;
  gf::Elem b;

  std::uint32_t g() const;
  std::uint32_t l() const;
  gf::Elem evaluate(gf::Elem z) const;
};

struct TrinomialResult {
  std::vector<gf::Elem> roots;  // sorted
  gf::Elem alpha;               // alpha_{l-1}
  gf::Elem beta;                // beta_{l-1}
  /// Whether the closed-form unique-root branch produced the answer.
  bool closed_form = false;
  /// The recurrence's emptiness test: alpha = 1 and beta != 0.
  bool predicts_empty = false;
};

/// alpha_r and beta_r of the recurrence, r = l - 1.
gf::Elem trinomial_alpha(const TrinomialInstance& t);
gf::Elem trinomial_beta(const TrinomialInstance& t);

/// Unique root from beta / (1 - alpha) when alpha != 1, otherwise the affine
/// solver on z^{p^k} - a z = b. Every root is substituted before return.
TrinomialResult trinomial_roots(const TrinomialInstance& t);

std::vector<gf::Elem> brute_force_roots(const TrinomialInstance& t);

}  // namespace cdu::solvers
