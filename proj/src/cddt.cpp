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

#include "cdu/cddt.hpp"

#include <algorithm>
#include <ostream>

#include "cdu/parallel.hpp"

namespace cdu::analysis {

namespace {

constexpr std::uint32_t kAddTableLimit = 2048;

}  // namespace

std::string classification_name(std::uint32_t max_entry) {
  if (max_entry == 1) return "PcN";
  if (max_entry == 2) return "APcN";
  return "uniformity-" + std::to_string(max_entry);
}

std::string CDdtReport::classification() const { return classification_name(max_entry); }

DerivativeEngine::DerivativeEngine(const FunctionTable& table, const simd::Kernels& kernels)
    : table_(&table), kernels_(&kernels) {
  const auto& f = *table.ctx;
  if (f.p() != 2 && f.q() <= kAddTableLimit) {
    auto add = std::make_shared<std::vector<std::uint32_t>>(std::size_t{f.q()} * f.q());
    for (std::uint32_t u = 0; u < f.q(); ++u) {
      for (std::uint32_t v = 0; v < f.q(); ++v) {
        (*add)[std::size_t{u} * f.q() + v] = f.add(gf::Elem{u}, gf::Elem{v}).v;
      }
    }
    add_ = std::move(add);
  }
}

std::vector<std::uint32_t> DerivativeEngine::coefficient_map(gf::Elem c) const {
  const auto& f = *table_->ctx;
  const gf::Elem k = f.p() == 2 ? c : f.neg(c);
  std::vector<std::uint32_t> m(f.q());
  for (std::uint32_t y = 0; y < f.q(); ++y) m[y] = f.mul(k, gf::Elem{y}).v;
  return m;
}

void DerivativeEngine::row(const std::vector<std::uint32_t>& cmap, gf::Elem a, std::uint32_t* out) const {
  const auto& f = *table_->ctx;
  const std::uint32_t q = f.q();
  const std::uint32_t* t = table_->values.data();
  if (f.p() == 2) {
    kernels_->row_binary(t, cmap.data(), a.v, q, out);
  } else if (add_) {
    const std::uint32_t* add = add_->data();
    kernels_->row_odd(t, add + std::size_t{a.v} * q, cmap.data(), add, q, out);
  } else {
    for (std::uint32_t x = 0; x < q; ++x) {
      out[x] = f.add(gf::Elem{t[f.add(gf::Elem{x}, a).v]}, gf::Elem{cmap[t[x]]}).v;
    }
  }
}

std::uint32_t c_ddt_entry(const FunctionTable& table, gf::Elem c, gf::Elem a, gf::Elem b) {
  const auto& f = *table.ctx;
  std::uint32_t count = 0;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const gf::Elem x{i};
    if (f.sub(table.at(f.add(x, a)), f.mul(c, table.at(x))) == b) ++count;
  }
  return count;
}

std::vector<std::uint32_t> c_ddt_row(const FunctionTable& table, gf::Elem c, gf::Elem a) {
  DerivativeEngine engine(table);
  const auto cmap = engine.coefficient_map(c);
  std::vector<std::uint32_t> out(table.ctx->q()), counts(table.ctx->q(), 0);
  engine.row(cmap, a, out.data());
  simd::histogram(out.data(), table.ctx->q(), counts.data());
  return counts;
}

CDdtReport c_uniformity(const DerivativeEngine& engine, gf::Elem c) {
  const auto& table = engine.table();
  const std::uint32_t q = table.ctx->q();
  const auto cmap = engine.coefficient_map(c);
  std::vector<std::uint32_t> out(q), counts(q);
  std::vector<std::uint64_t> spectrum(q + 1, 0);
  CDdtReport report;
  report.c = c;
  const bool c_is_one = c == table.ctx->one();
  for (std::uint32_t a = 0; a < q; ++a) {
    engine.row(cmap, gf::Elem{a}, out.data());
    std::fill(counts.begin(), counts.end(), 0u);
    simd::histogram(out.data(), q, counts.data());
    if (c_is_one && a == 0) {
      std::vector<std::uint64_t> ex(q + 1, 0);
      for (auto v : counts) ++ex[v];
      for (std::uint32_t v = 0; v <= q; ++v) {
        if (ex[v]) report.excluded[v] = ex[v];
      }
      continue;
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t v = counts[b];
      ++spectrum[v];
      if (v > report.max_entry) {
        report.max_entry = v;
        report.witnesses.clear();
      }
      if (v == report.max_entry && report.witnesses.size() < kWitnessCap) report.witnesses.emplace_back(a, b);
    }
  }
  for (std::uint32_t v = 0; v <= q; ++v) {
    if (spectrum[v]) report.spectrum[v] = spectrum[v];
  }
  return report;
}

CDdtReport c_uniformity(const FunctionTable& table, gf::Elem c) {
  return c_uniformity(DerivativeEngine(table), c);
}

std::vector<CDdtReport> full_c_sweep(const FunctionTable& table, const std::vector<gf::Elem>& cs,
                                     unsigned workers) {
  const DerivativeEngine engine(table);
  std::vector<CDdtReport> reports(cs.size());
  parallel_for(cs.size(), workers, [&](std::size_t i) { reports[i] = c_uniformity(engine, cs[i]); });
  return reports;
}

bool derivative_is_bijective(const FunctionTable& table, gf::Elem c, gf::Elem a) {
  const auto& f = *table.ctx;
  std::vector<bool> seen(f.q(), false);
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const gf::Elem x{i};
    const auto y = f.sub(table.at(f.add(x, a)), f.mul(c, table.at(x))).v;
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

void write_ddt_csv(std::ostream& os, const FunctionTable& table, gf::Elem c) {
  const DerivativeEngine engine(table);
  const std::uint32_t q = table.ctx->q();
  const auto cmap = engine.coefficient_map(c);
  std::vector<std::uint32_t> out(q), counts(q);
  os << "a,b,count\n";
  for (std::uint32_t a = 0; a < q; ++a) {
    engine.row(cmap, gf::Elem{a}, out.data());
    std::fill(counts.begin(), counts.end(), 0u);
    simd::histogram(out.data(), q, counts.data());
    for (std::uint32_t b = 0; b < q; ++b) os << a << ',' << b << ',' << counts[b] << '\n';
  }
}

}  // namespace cdu::analysis
