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

#include "cdu/charsum.hpp"

#include <algorithm>
#include <vector>

#include "cdu/cycint.hpp"
#include "cdu/error.hpp"

namespace cdu::analysis {

std::uint64_t charsum_count(const FunctionTable& table, gf::Elem c, gf::Elem a, gf::Elem b) {
  const auto& f = *table.ctx;
  const std::uint32_t q = f.q(), p = f.p();
  std::vector<gf::Elem> diff(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    const gf::Elem x{i};
    diff[i] = f.sub(f.sub(table.at(f.add(x, a)), f.mul(c, table.at(x))), b);
  }
  cyc::CycInt total(p);
  std::vector<std::int64_t> counts(p);
  for (std::uint32_t beta = 0; beta < q; ++beta) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t i = 0; i < q; ++i) ++counts[f.abs_trace(f.mul(gf::Elem{beta}, diff[i]))];
    total += cyc::CycInt::from_exponent_counts(p, counts);
  }
  const cyc::CycInt n = total.exact_div(q);
  if (!n.is_rational_integer() || n.rational_value() < 0) {
    throw Error(Errc::NonIntegralCount, "character sum gave " + n.to_string());
  }
  return static_cast<std::uint64_t>(n.rational_value());
}

}  // namespace cdu::analysis
