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

#include <string_view>
#include <vector>

#include "cdu/claim.hpp"

namespace cdu::harness {

enum class SuiteId {
  TB1,
  TB2,
  TB3,
  TT4,
  TP5,
  LWalshVanish,
  LQuadWalsh,
  LAtMost4,
  LCM04,
  LAB,
  LPerm,
  LCharSum,
};

std::string_view suite_name(SuiteId id) noexcept;
/// Exact names such as "T-B1" or "L-CharSum", case-insensitive (ParseError).
SuiteId parse_suite(std::string_view text);
const std::vector<SuiteId>& all_suites();

/// Runs every cell of the suite's grid. Output depends only on (id, cfg minus
/// workers). Throws UnsupportedParameters for grids the suite cannot run.
SuiteReport run_suite(SuiteId id, const SuiteConfig& cfg);

}  // namespace cdu::harness
