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

#include "cdu/cycint.hpp"
#include "cdu/error.hpp"
#include "cdu/field.hpp"

using namespace cdu;
using cyc::CycInt;

namespace {

CycInt random_cyc(std::uint32_t p, std::mt19937_64& rng) {
  std::vector<std::int64_t> counts(p);
  for (auto& c : counts) c = static_cast<std::int64_t>(rng() % 41) - 20;
  return CycInt::from_exponent_counts(p, counts);
}

}  // namespace

TEST_CASE("p=3 worked products") {
  const auto one = CycInt::integer(3, 1);
  const auto w = CycInt::root(3, 1);
  const auto w2 = CycInt::root(3, 2);
  CHECK((one + w) * (one + w2) == one);
  CHECK((one + w).conjugate() == one + w2);
  CHECK((one + w).conjugate() == -w);
  CHECK(w.pow(3) == one);
  CHECK(CycInt::root(3, -1) == w2);
  CHECK(w.conjugate() == CycInt::root(3, 2));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto one = CycInt::integer(p, 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_cyc(p, rng), b = random_cyc(p, rng), c = random_cyc(p, rng);
      CHECK(a * one == a);
      CHECK(a + CycInt(p) == a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycInt(p));
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK(a.norm_squared().conjugate() == a.norm_squared());
    }
    CHECK(CycInt::root(p, p) == one);
    for (std::uint32_t j = 0; j < p; ++j) CHECK(CycInt::root(p, j).norm_squared() == one);
  }
}

TEST_CASE("vanishing sum of all roots") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CycInt s(p);
    for (std::uint32_t j = 0; j < p; ++j) s += CycInt::root(p, j);
    CHECK(s.is_zero());
  }
}

TEST_CASE("rational integers") {
  const auto z = CycInt::integer(5, -17);
  CHECK(z.is_rational_integer());
  CHECK(z.rational_value() == -17);
  CHECK(z.conjugate() == z);
  CHECK(CycInt::integer(2, 6).norm_squared().rational_value() == 36);
  CHECK_FALSE(CycInt::root(5, 2).is_rational_integer());
  CHECK_THROWS_AS(CycInt::root(5, 2).rational_value(), Error);
}

TEST_CASE("exact division") {
  const auto a = CycInt::from_exponent_counts(3, {6, 9, 0});
  CHECK(a.exact_div(3) == CycInt::from_exponent_counts(3, {2, 3, 0}));
  try {
    (void)a.exact_div(4);
    FAIL("inexact division accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIntegralCount);
  }
}

TEST_CASE("mixed orders are rejected") {
  try {
    (void)(CycInt::root(3, 1) + CycInt::root(5, 1));
    FAIL("mixed orders accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedCyclotomicOrder);
  }
}

TEST_CASE("overflow is a hard error") {
  auto big = CycInt::integer(3, static_cast<cyc::Int>(1) << 100);
  CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("complex image matches") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_cyc(5, rng), b = random_cyc(5, rng);
    const auto lhs = (a * b).to_complex();
    const auto rhs = a.to_complex() * b.to_complex();
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("text form") {
  CHECK(CycInt(3).to_string() == "0");
  CHECK(CycInt::from_exponent_counts(3, {2, 0, -1}).to_string() == "3 + 1*w");
}

TEST_CASE("additive character sums") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 1}, {3, 3}}) {
    auto f = gf::FieldCtx::build(p, n);
    CHECK(cyc::char_sum(*f, f->zero()) == CycInt::integer(p, f->q()));
    for (std::uint32_t u = 1; u < f->q(); ++u) CHECK(cyc::char_sum(*f, gf::Elem{u}).is_zero());
  }
}

TEST_CASE("quadratic Gauss sum over F_3") {
  CycInt s(3);
  for (std::int64_t x = 0; x < 3; ++x) s += CycInt::root(3, x * x);
  CHECK(s.norm_squared() == CycInt::integer(3, 3));
}
