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
#include <string>

#include "cdu/cddt.hpp"
#include "cdu/claim.hpp"

namespace cdu::harness {

inline constexpr const char* kSchema = "cdu-report/1";

Json field_json(const gf::FieldCtx& ctx);
Json to_json(const SuiteReport& report);

/// Optional family context printed alongside a c-DDT report.
struct FunctionLabel {
  std::string family;  // empty for an anonymous table
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> delta;
};

Json to_json(const analysis::CDdtReport& report, const gf::FieldCtx& ctx, const FunctionLabel& label);

/// Two-space indented JSON followed by a newline.
std::string render(const Json& j);

}  // namespace cdu::harness
