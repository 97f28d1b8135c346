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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cdu/function_table.hpp"
#include "cdu/simd/kernels.hpp"

namespace cdu::analysis {

inline constexpr std::size_t kWitnessCap = 16;

struct CDdtReport {
  gf::Elem c;
  std::uint32_t max_entry = 0;
  /// entry value -> number of admissible (a, b) pairs with that entry.
  std::map<std::uint32_t, std::uint64_t> spectrum;
  /// Same histogram for the a = 0 row when c = 1; empty otherwise.
  std::map<std::uint32_t, std::uint64_t> excluded;
  /// Up to kWitnessCap (a, b) index pairs attaining max_entry, ordered by (a, b).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> witnesses;

  /// "PcN", "APcN" or "uniformity-k".
  std::string classification() const;
};

std::string classification_name(std::uint32_t max_entry);

/// Computes rows x -> F(x + a) - c F(x) of one table with the selected kernels.
class DerivativeEngine {
 public:
  explicit DerivativeEngine(const FunctionTable& table, const simd::Kernels& kernels = simd::active());

  /// Per-c lookup consumed by row(): c*y for p = 2, -c*y for odd p.
  std::vector<std::uint32_t> coefficient_map(gf::Elem c) const;
  void row(const std::vector<std::uint32_t>& cmap, gf::Elem a, std::uint32_t* out) const;
  const FunctionTable& table() const noexcept { return *table_; }

 private:
  const FunctionTable* table_;
  const simd::Kernels* kernels_;
  std::shared_ptr<const std::vector<std::uint32_t>> add_;  // add[u*q + v] = u + v, odd p only
};

/// Number of x with F(x + a) - c F(x) = b, by direct counting.
std::uint32_t c_ddt_entry(const FunctionTable& table, gf::Elem c, gf::Elem a, gf::Elem b);

/// counts[b] for one (c, a).
std::vector<std::uint32_t> c_ddt_row(const FunctionTable& table, gf::Elem c, gf::Elem a);

/// Maximum over (a, b), excluding a = 0 when c = 1.
CDdtReport c_uniformity(const FunctionTable& table, gf::Elem c);
CDdtReport c_uniformity(const DerivativeEngine& engine, gf::Elem c);

/// One report per c, in input order, independent of the worker count.
std::vector<CDdtReport> full_c_sweep(const FunctionTable& table, const std::vector<gf::Elem>& cs,
                                     unsigned workers = 1);

/// Whether x -> F(x + a) - c F(x) is a bijection.
bool derivative_is_bijective(const FunctionTable& table, gf::Elem c, gf::Elem a);

/// "a,b,count" header followed by q^2 rows.
void write_ddt_csv(std::ostream& os, const FunctionTable& table, gf::Elem c);

}  // namespace cdu::analysis
