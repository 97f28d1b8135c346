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

#include "cdu/function_table.hpp"

namespace cdu::analysis {

/// #{x : F(x + a) - c F(x) = b} computed as
/// (1/q) sum_beta sum_x w^Tr(beta (F(x + a) - c F(x) - b)) in Z[w].
/// Throws NonIntegralCount if the sum is not q times a rational integer.
std::uint64_t charsum_count(const FunctionTable& table, gf::Elem c, gf::Elem a, gf::Elem b);

}  // namespace cdu::analysis
