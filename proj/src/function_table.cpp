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

#include "cdu/function_table.hpp"

#include <string>

#include "cdu/error.hpp"
#include "cdu/parallel.hpp"

namespace cdu {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CDU_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace analysis {

FunctionTable make_table(gf::FieldPtr ctx, std::vector<std::uint32_t> values) {
  if (values.size() != ctx->q()) {
    throw Error(Errc::ShapeMismatch, "table length " + std::to_string(values.size()) + " != q");
  }
  for (auto v : values) {
    if (v >= ctx->q()) throw Error(Errc::InvalidElement, "table value " + std::to_string(v) + " out of range");
  }
  return FunctionTable{std::move(ctx), std::move(values)};
}

FunctionTable identity_table(gf::FieldPtr ctx) {
  return tabulate(std::move(ctx), [](gf::Elem x) { return x; });
}

bool is_permutation(const FunctionTable& table) {
  std::vector<bool> seen(table.values.size(), false);
  for (auto v : table.values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace analysis
}  // namespace cdu
