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

#include "cdu/error.hpp"
#include "cdu/family.hpp"
#include "cdu/function_table.hpp"

using namespace cdu;
using families::FamilyId;
using gf::Elem;

namespace {

Elem slow_pow(const gf::FieldCtx& f, Elem x, std::uint64_t e) {
  Elem r = f.one();
  while (e) {
    if (e & 1) r = f.mul_poly(r, x);
    x = f.mul_poly(x, x);
    e >>= 1;
  }
  return r;
}

Elem reference_value(const families::FamilyInstance& inst, Elem x) {
  const auto& f = *inst.ctx;
  Elem xm = x;
  for (std::uint32_t i = 0; i < inst.m; ++i) xm = slow_pow(f, xm, f.p());
  const Elem lin = f.p() == 2 ? f.add(xm, x) : f.sub(xm, x);
  return f.add(slow_pow(f, f.add(lin, inst.delta), inst.s), x);
}

bool all_permutations(FamilyId id, std::uint32_t p, std::uint32_t m) {
  auto f = families::family_field(id, p, m);
  for (std::uint32_t d = 0; d < f->q(); ++d) {
    const auto inst = families::instantiate(id, f, m, Elem{d}, false);
    if (!analysis::is_permutation(families::as_lut(inst))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("derived exponents") {
  CHECK(families::family_exponent(FamilyId::B1, 2, 1) == 5);
  CHECK(families::family_exponent(FamilyId::T4, 3, 2) == 33);
  CHECK(families::family_exponent(FamilyId::B2, 2, 2) == 10);
  CHECK(families::family_exponent(FamilyId::B3, 2, 1) == 5);
  CHECK(families::family_exponent(FamilyId::P5, 5, 1) == 26);
  auto f = families::family_field(FamilyId::B1, 2, 1);
  CHECK(families::instantiate(FamilyId::B1, f, 1, Elem{0}, true).s == 5);
}

TEST_CASE("instantiate enforces shapes and hypotheses") {
  auto f12 = families::family_field(FamilyId::B2, 2, 4);
  try {
    families::instantiate(FamilyId::B2, f12, 4, Elem{0}, true);
    FAIL("b2 m=4 accepted in strict mode");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolation);
  }
  const auto loose = families::instantiate(FamilyId::B2, f12, 4, Elem{0}, false);
  CHECK(loose.outside_hypotheses);
  CHECK_FALSE(loose.hypothesis_note.empty());
  try {
    families::instantiate(FamilyId::T4, families::family_field(FamilyId::B1, 2, 1), 1, Elem{0}, false);
    FAIL("shape mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ShapeMismatch);
  }
  CHECK_THROWS_AS(families::instantiate(FamilyId::B1, gf::FieldCtx::build(2, 4), 1, Elem{0}, false), Error);
  CHECK(families::instantiate(FamilyId::T4, families::family_field(FamilyId::T4, 3, 1), 1, Elem{0}, false)
            .outside_hypotheses);
  CHECK_FALSE(families::instantiate(FamilyId::B3, families::family_field(FamilyId::B3, 2, 1), 1, Elem{0}, true)
                  .outside_hypotheses);
  CHECK(families::parse_family("T4") == FamilyId::T4);
  CHECK_THROWS_AS(families::parse_family("b9"), Error);
}

TEST_CASE("point values") {
  for (auto id : {FamilyId::B1, FamilyId::B2, FamilyId::B3, FamilyId::T4, FamilyId::P5}) {
    auto f = families::family_field(id, 3, 1);
    const auto inst = families::instantiate(id, f, 1, Elem{0}, false);
    CHECK(families::evaluate(inst, Elem{0}) == Elem{0});
  }
  auto f8 = families::family_field(FamilyId::B1, 2, 1);
  CHECK(families::evaluate(families::instantiate(FamilyId::B1, f8, 1, Elem{0}, true), Elem{1}) == Elem{1});
}

TEST_CASE("evaluation agrees with a table-free reference") {
  std::mt19937_64 rng(11);
  for (auto [id, p, m] : std::vector<std::tuple<FamilyId, std::uint32_t, std::uint32_t>>{
           {FamilyId::B1, 2, 2}, {FamilyId::B2, 2, 2}, {FamilyId::B3, 2, 3}, {FamilyId::T4, 3, 2}, {FamilyId::P5, 5, 1},
           {FamilyId::P5, 3, 2}}) {
    auto f = families::family_field(id, p, m);
    for (int t = 0; t < 10; ++t) {
      const auto inst = families::instantiate(id, f, m, Elem{static_cast<std::uint32_t>(rng() % f->q())}, false);
      const auto lut = families::as_lut(inst);
      for (int i = 0; i < 100; ++i) {
        const Elem x{static_cast<std::uint32_t>(rng() % f->q())};
        CHECK(lut.at(x) == reference_value(inst, x));
        CHECK(lut.at(x) == families::evaluate(inst, x));
      }
    }
  }
}

TEST_CASE("binary families permute for every delta within their congruences") {
  for (std::uint32_t m : {1u, 2u, 3u}) {
    CHECK(all_permutations(FamilyId::B1, 2, m));
    if (m % 3 != 1) CHECK(all_permutations(FamilyId::B2, 2, m));
    if ((2 * m) % 3 != 1) CHECK(all_permutations(FamilyId::B3, 2, m));
  }
}

TEST_CASE("ternary family permutes at m=2") { CHECK(all_permutations(FamilyId::T4, 3, 2)); }

TEST_CASE("ternary family at odd m is recorded, not assumed") {
  auto f = families::family_field(FamilyId::T4, 3, 1);
  std::uint32_t perms = 0;
  for (std::uint32_t d = 0; d < f->q(); ++d) {
    perms += analysis::is_permutation(families::as_lut(families::instantiate(FamilyId::T4, f, 1, Elem{d}, false)));
  }
  CHECK(perms == 3);
}

TEST_CASE("odd family permutes on the trace-zero and power branches") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    auto f = families::family_field(FamilyId::P5, p, m);
    for (std::uint32_t d = 0; d < f->q(); ++d) {
      const Elem delta{d};
      const bool perm =
          analysis::is_permutation(families::as_lut(families::instantiate(FamilyId::P5, f, m, delta, false)));
      if (families::p5_trace_zero(*f, m, delta)) CHECK(perm);
      if (families::p5_power_branch(*f, m, delta, -1)) CHECK(perm);
    }
  }
}

TEST_CASE("the plus branch is not sufficient at p=3") {
  auto f = families::family_field(FamilyId::P5, 3, 1);
  bool counterexample = false;
  for (std::uint32_t d = 0; d < f->q(); ++d) {
    const Elem delta{d};
    if (!families::p5_power_branch(*f, 1, delta, +1)) continue;
    counterexample |=
        !analysis::is_permutation(families::as_lut(families::instantiate(FamilyId::P5, f, 1, delta, false)));
  }
  CHECK(counterexample);
}

TEST_CASE("expanded and trace forms agree with direct evaluation") {
  std::mt19937_64 rng(5);
  const std::vector<std::tuple<FamilyId, std::uint32_t, std::uint32_t>> grid = {
      {FamilyId::B1, 2, 1}, {FamilyId::B1, 2, 2}, {FamilyId::B1, 2, 3}, {FamilyId::B2, 2, 1}, {FamilyId::B2, 2, 2},
      {FamilyId::B2, 2, 3}, {FamilyId::B3, 2, 1}, {FamilyId::B3, 2, 2}, {FamilyId::B3, 2, 3}, {FamilyId::T4, 3, 1},
      {FamilyId::T4, 3, 2}, {FamilyId::T4, 3, 3}, {FamilyId::P5, 3, 1}, {FamilyId::P5, 5, 1}, {FamilyId::P5, 7, 1},
      {FamilyId::P5, 3, 2}, {FamilyId::P5, 5, 2}, {FamilyId::P5, 3, 3}};
  for (auto [id, p, m] : grid) {
    auto f = families::family_field(id, p, m);
    CAPTURE(f->spec_string());
    std::vector<std::uint32_t> deltas;
    if (f->q() <= 81) {
      for (std::uint32_t d = 0; d < f->q(); ++d) deltas.push_back(d);
    } else {
      deltas = {0, 1};
      for (int i = 0; i < 4; ++i) deltas.push_back(static_cast<std::uint32_t>(rng() % f->q()));
    }
    bool ok = true;
    for (auto d : deltas) {
      const auto inst = families::instantiate(id, f, m, Elem{d}, false);
      for (std::uint32_t x = 0; x < f->q(); ++x) {
        const Elem direct = families::evaluate(inst, Elem{x});
        if (families::has_expansion(id)) ok = ok && families::evaluate_expanded(inst, Elem{x}) == direct;
        if (families::has_trace_form(id)) ok = ok && families::evaluate_trace_form(inst, Elem{x}) == direct;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("expansion availability") {
  auto f = families::family_field(FamilyId::B2, 2, 2);
  const auto inst = families::instantiate(FamilyId::B2, f, 2, Elem{3}, false);
  try {
    (void)families::evaluate_expanded(inst, Elem{1});
    FAIL("expansion accepted for b2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedFamily);
  }
  auto f9 = families::family_field(FamilyId::P5, 3, 1);
  CHECK(families::evaluate_expanded(families::instantiate(FamilyId::P5, f9, 1, Elem{0}, false), Elem{0}) == Elem{0});
}

TEST_CASE("ternary reduction on trace-zero deltas") {
  auto f = families::family_field(FamilyId::T4, 3, 2);
  for (std::uint32_t d = 0; d < f->q(); ++d) {
    const Elem delta{d};
    const auto inst = families::instantiate(FamilyId::T4, f, 2, delta, false);
    if (f->rel_trace(delta, 2).v != 0) {
      CHECK_THROWS_AS(families::t4_gamma0_reduction(inst, Elem{1}), Error);
      continue;
    }
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      CHECK(families::t4_gamma0_reduction(inst, Elem{x}) == families::evaluate(inst, Elem{x}));
    }
  }
}

TEST_CASE("lookup table matches pointwise evaluation") {
  std::mt19937_64 rng(2);
  auto f = families::family_field(FamilyId::B1, 2, 3);
  const auto inst = families::instantiate(FamilyId::B1, f, 3, Elem{77}, true);
  const auto lut = families::as_lut(inst);
  REQUIRE(lut.values.size() == f->q());
  for (int i = 0; i < 100; ++i) {
    const Elem x{static_cast<std::uint32_t>(rng() % f->q())};
    CHECK(lut.at(x) == families::evaluate(inst, x));
  }
  CHECK(analysis::is_permutation(lut));
}
