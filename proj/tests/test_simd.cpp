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

#include <doctest.h>

#include <random>

#include "cdu/cddt.hpp"
#include "cdu/function_table.hpp"
#include "cdu/simd/kernels.hpp"
#include "cdu/walsh.hpp"

using namespace cdu;
using gf::Elem;

namespace {

std::vector<const simd::Kernels*> available_kernels() {
  std::vector<const simd::Kernels*> out{&simd::kernels(simd::Isa::Scalar)};
  if (simd::isa_available(simd::Isa::Avx2)) out.push_back(&simd::kernels(simd::Isa::Avx2));
  return out;
}

analysis::FunctionTable random_table(gf::FieldPtr f, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(f->q());
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % f->q());
  return analysis::make_table(f, std::move(v));
}

}  // namespace

TEST_CASE("scalar kernel set is always present") {
  CHECK(simd::isa_available(simd::Isa::Scalar));
  CHECK(simd::kernels(simd::Isa::Scalar).isa == simd::Isa::Scalar);
  CHECK(simd::isa_name(simd::Isa::Avx2) == "avx2");
  const auto& k = simd::active();
  CHECK(simd::isa_available(k.isa));
}

TEST_CASE("derivative rows agree across kernel sets") {
  std::mt19937_64 rng(31);
  const auto sets = available_kernels();
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 7}}) {
    auto f = gf::FieldCtx::build(p, n);
    CAPTURE(f->spec_string());
    const auto t = random_table(f, rng);
    std::vector<analysis::DerivativeEngine> engines;
    for (auto* k : sets) engines.emplace_back(t, *k);
    for (int trial = 0; trial < 6; ++trial) {
      const Elem c{static_cast<std::uint32_t>(rng() % f->q())};
      const Elem a{static_cast<std::uint32_t>(rng() % f->q())};
      std::vector<std::uint32_t> reference;
      for (auto& e : engines) {
        std::vector<std::uint32_t> out(f->q());
        e.row(e.coefficient_map(c), a, out.data());
        if (reference.empty()) {
          reference = out;
          for (std::uint32_t x = 0; x < f->q(); ++x) {
            CHECK(out[x] == f->sub(t.at(f->add(Elem{x}, a)), f->mul(c, t.at(Elem{x}))).v);
          }
        } else {
          CHECK(out == reference);
        }
      }
    }
  }
}

TEST_CASE("uniformity reports agree across kernel sets") {
  std::mt19937_64 rng(32);
  const auto sets = available_kernels();
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}, {5, 2}}) {
    auto f = gf::FieldCtx::build(p, n);
    const auto t = random_table(f, rng);
    for (std::uint32_t c = 0; c < f->q(); c += 7) {
      std::optional<analysis::CDdtReport> first;
      for (auto* k : sets) {
        const auto r = analysis::c_uniformity(analysis::DerivativeEngine(t, *k), Elem{c});
        if (!first) {
          first = r;
          continue;
        }
        CHECK(r.max_entry == first->max_entry);
        CHECK(r.spectrum == first->spectrum);
        CHECK(r.witnesses == first->witnesses);
      }
    }
  }
}

TEST_CASE("binary walsh kernel agrees across kernel sets") {
  std::mt19937_64 rng(33);
  const auto sets = available_kernels();
  for (std::uint32_t n = 1; n <= 10; ++n) {
    auto f = gf::FieldCtx::build(2, n);
    std::vector<std::uint32_t> bits(f->q());
    for (auto& b : bits) b = static_cast<std::uint32_t>(rng() & 1);
    for (std::uint32_t v = 0; v < f->q(); v += 1 + f->q() / 16) {
      const std::uint32_t mask = analysis::trace_mask(*f, Elem{v});
      std::int64_t direct = 0;
      for (std::uint32_t x = 0; x < f->q(); ++x) {
        direct += ((bits[x] ^ static_cast<std::uint32_t>(__builtin_popcount(x & mask) & 1)) == 0) ? 1 : -1;
      }
      for (auto* k : sets) CHECK(k->walsh_binary(bits.data(), mask, f->q()) == direct);
    }
  }
}

TEST_CASE("histogram") {
  std::vector<std::uint32_t> out = {0, 1, 1, 3, 3, 3, 0, 2, 2};
  std::vector<std::uint32_t> counts(9, 0);
  simd::histogram(out.data(), 9, counts.data());
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 2);
  CHECK(counts[3] == 3);
}
