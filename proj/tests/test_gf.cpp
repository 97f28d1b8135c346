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

#include <numeric>

#include "cdu/error.hpp"
#include "cdu/field.hpp"
#include "cdu/poly_fp.hpp"

using namespace cdu;
using gf::Elem;
using gf::FieldCtx;

namespace {

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible_by_trial(const poly::Poly& f, std::uint32_t p) {
  const int d = poly::degree(f);
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      poly::Poly g(k + 1, 0);
      g[k] = 1;
      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i, t /= p) g[i] = static_cast<std::uint32_t>(t % p);
      if (poly::degree(poly::mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

gf::FieldPtr second_modulus_field(std::uint32_t p, std::uint32_t n) {
  const auto first = FieldCtx::build(p, n)->modulus();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    poly::Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < n; ++i, t /= p) f[i] = static_cast<std::uint32_t>(t % p);
    if (f != first && irreducible_by_trial(f, p)) return FieldCtx::build(gf::FieldSpec{p, n, f});
  }
  return nullptr;
}

}  // namespace

TEST_CASE("build_field shapes and errors") {
  CHECK(FieldCtx::build(2, 3)->q() == 8);
  auto f = FieldCtx::build(gf::FieldSpec{2, 3, {1, 0, 1, 1}});
  CHECK(f->q() == 8);
  CHECK(irreducible_by_trial({1, 0, 1, 1}, 2));
  CHECK_FALSE(irreducible_by_trial({1, 1, 1, 1}, 2));
  try {
    FieldCtx::build(gf::FieldSpec{2, 3, {1, 1, 1, 1}});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
  try {
    FieldCtx::build(4, 2);
    FAIL("non-prime accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeCharacteristic);
  }
  try {
    FieldCtx::build(gf::FieldSpec{2, 4, {1, 1, 0, 1}});
    FAIL("degree mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeMismatch);
  }
}

TEST_CASE("default modulus is the least irreducible") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 6}, {3, 2}, {3, 4}, {5, 2}}) {
    const auto mod = FieldCtx::build(p, n)->modulus();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    poly::Poly least;
    for (std::uint64_t idx = 0; idx < count && least.empty(); ++idx) {
      poly::Poly g(n + 1, 0);
      g[n] = 1;
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < n; ++i, t /= p) g[i] = static_cast<std::uint32_t>(t % p);
      if (irreducible_by_trial(g, p)) least = g;
    }
    CHECK(mod == least);
  }
}

TEST_CASE("spec text round trip") {
  const auto s = gf::parse_spec("p=2,n=6,mod=1011011");
  CHECK(s.p == 2);
  CHECK(s.n == 6);
  CHECK(s.modulus == poly::Poly{1, 1, 0, 1, 1, 0, 1});
  CHECK(gf::format_spec(s) == "p=2,n=6,mod=1011011");
  const auto t = gf::parse_spec("p=3,n=2,mod=1,0,1");
  CHECK(t.modulus == poly::Poly{1, 0, 1});
  CHECK(gf::format_spec(t) == "p=3,n=2,mod=1,0,1");
  CHECK(FieldCtx::build(3, 4)->spec_string() == gf::format_spec(FieldCtx::build(3, 4)->spec()));
}

TEST_CASE("F_8 mod X^3+X+1 worked values") {
  auto f = FieldCtx::build(gf::FieldSpec{2, 3, {1, 1, 0, 1}});
  const Elem alpha{2};
  const Elem alpha2 = f->mul(alpha, alpha);
  CHECK(alpha2 == Elem{4});
  CHECK(f->mul(alpha, alpha2) == Elem{3});
  CHECK(f->abs_trace(alpha) == 0);
  CHECK(f->rel_trace(alpha, 1) == f->zero());
  CHECK(f->to_string(Elem{3}) == "X + 1");
}

TEST_CASE("F_4 Frobenius of a root of X^2+X+1") {
  auto f = FieldCtx::build(gf::FieldSpec{2, 2, {1, 1, 1}});
  CHECK(f->frobenius(Elem{2}, 1) == Elem{3});
}

TEST_CASE("field axioms exhaustively for q <= 512") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> shapes = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
      {3, 5}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {7, 3}, {11, 2}, {13, 2}, {17, 2}, {19, 2}, {23, 1}};
  for (auto [p, n] : shapes) {
    auto f = FieldCtx::build(p, n);
    const std::uint32_t q = f->q();
    CAPTURE(f->spec_string());
    bool ok = true;
    for (std::uint32_t x = 0; x < q && ok; ++x) {
      const Elem ex{x};
      ok = ok && f->add(ex, f->zero()) == ex && f->mul(ex, f->one()) == ex;
      ok = ok && f->add(ex, f->neg(ex)) == f->zero();
      if (x != 0) {
        const Elem inv = f->inv(ex);
        ok = ok && f->mul(ex, inv) == f->one();
        std::uint32_t count = 0;
        for (std::uint32_t y = 0; y < q; ++y) count += f->mul(ex, Elem{y}) == f->one();
        ok = ok && count == 1;
        if (f->has_tables()) ok = ok && f->exp(f->log(ex)) == ex;
      }
      for (std::uint32_t y = 0; y < q && ok; ++y) {
        const Elem ey{y};
        const Elem xy = f->mul(ex, ey);
        ok = ok && xy == f->mul(ey, ex) && xy == f->mul_poly(ex, ey);
        ok = ok && f->add(ex, ey) == f->add(ey, ex);
        for (std::uint32_t z = 0; z < q; ++z) {
          const Elem ez{z};
          if (f->mul(xy, ez) != f->mul(ex, f->mul(ey, ez))) ok = false;
          if (f->mul(ex, f->add(ey, ez)) != f->add(xy, f->mul(ex, ez))) ok = false;
          if (f->add(f->add(ex, ey), ez) != f->add(ex, f->add(ey, ez))) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("pow conventions") {
  auto f = FieldCtx::build(3, 3);
  CHECK(f->pow(f->zero(), 0) == f->one());
  CHECK(f->pow(f->zero(), 5) == f->zero());
  for (std::uint32_t x = 1; x < f->q(); ++x) {
    CHECK(f->pow(Elem{x}, f->q() - 1) == f->one());
    CHECK(f->pow(Elem{x}, 7) == f->pow(Elem{x}, 7 + 3 * (f->q() - 1)));
    Elem acc = f->one();
    for (int i = 0; i < 5; ++i) acc = f->mul(acc, Elem{x});
    CHECK(f->pow(Elem{x}, 5) == acc);
  }
  CHECK_THROWS_AS(f->inv(f->zero()), Error);
}

TEST_CASE("Frobenius is additive, multiplicative and periodic") {
  auto f = FieldCtx::build(3, 4);
  for (std::uint32_t x = 0; x < f->q(); ++x) {
    const Elem ex{x};
    CHECK(f->frobenius(ex, 4) == ex);
    CHECK(f->frobenius(ex, 1) == f->pow(ex, 3));
    const Elem ey{(x * 37 + 11) % f->q()};
    for (std::uint32_t k = 0; k < 4; ++k) {
      CHECK(f->frobenius(f->add(ex, ey), k) == f->add(f->frobenius(ex, k), f->frobenius(ey, k)));
      CHECK(f->frobenius(f->mul(ex, ey), k) == f->mul(f->frobenius(ex, k), f->frobenius(ey, k)));
    }
  }
}

TEST_CASE("relative trace is subfield-linear and Frobenius invariant") {
  for (auto [p, n, m] : std::vector<std::array<std::uint32_t, 3>>{{2, 6, 2}, {2, 6, 3}, {3, 4, 2}, {2, 9, 3}, {5, 2, 1}}) {
    auto f = FieldCtx::build(p, n);
    const auto sub = f->subfield_elements(m);
    bool ok = true;
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      const Elem ex{x};
      const Elem t = f->rel_trace(ex, m);
      ok = ok && f->in_subfield(t, m) && f->frobenius(t, m) == t;
      ok = ok && f->rel_trace(f->frobenius(ex, m), m) == t;
      const Elem ey{(x * 5 + 3) % f->q()};
      ok = ok && f->rel_trace(f->add(ex, ey), m) == f->add(t, f->rel_trace(ey, m));
      for (auto lam : sub) ok = ok && f->rel_trace(f->mul(lam, ex), m) == f->mul(lam, t);
    }
    CHECK(ok);
  }
}

TEST_CASE("trace transitivity") {
  for (auto [p, n, m] : std::vector<std::array<std::uint32_t, 3>>{{2, 6, 2}, {2, 6, 3}, {3, 4, 2}}) {
    auto f = FieldCtx::build(p, n);
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      const Elem t = f->rel_trace(Elem{x}, m);
      Elem inner = f->zero();
      for (std::uint32_t i = 0; i < m; ++i) inner = f->add(inner, f->frobenius(t, i));
      CHECK(inner == f->scalar(f->abs_trace(Elem{x})));
      CHECK(f->rel_trace(Elem{x}, 1) == f->scalar(f->abs_trace(Elem{x})));
    }
  }
  CHECK(FieldCtx::build(2, 3)->rel_trace(Elem{1}, 1) == Elem{1});
}

TEST_CASE("subfield membership") {
  auto f = FieldCtx::build(2, 6);
  const Elem g = f->generator();
  CHECK(f->order(g) == 63);
  CHECK(f->in_subfield(f->pow(g, 21), 2));
  CHECK_FALSE(f->in_subfield(g, 2));
  CHECK(f->in_subfield(g, 6));
  CHECK(f->subfield_elements(2).size() == 4);
  CHECK(f->subfield_elements(3).size() == 8);
  try {
    (void)f->in_subfield(g, 4);
    FAIL("non-divisor accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonDivisorSubfieldDegree);
  }
  CHECK_THROWS_AS(f->rel_trace(g, 5), Error);
}

TEST_CASE("d-th powers") {
  auto f9 = FieldCtx::build(3, 2);
  CHECK(f9->is_dth_power(f9->scalar(-1), 2));
  auto f3 = FieldCtx::build(3, 1);
  CHECK_FALSE(f3->is_dth_power(f3->scalar(-1), 2));
  auto f = FieldCtx::build(5, 2);
  for (std::uint32_t x = 0; x < f->q(); ++x) {
    CHECK(f->is_dth_power(Elem{x}, 1));
    for (std::uint64_t d : {2u, 3u, 4u, 6u}) {
      bool found = false;
      for (std::uint32_t y = 0; y < f->q() && !found; ++y) found = f->pow(Elem{y}, d) == Elem{x};
      CHECK(f->is_dth_power(Elem{x}, d) == found);
      const auto r = f->dth_root(Elem{x}, d);
      CHECK(r.has_value() == found);
      if (r) CHECK(f->pow(*r, d) == Elem{x});
    }
  }
  CHECK(f->is_dth_power(f->zero(), 7));
}

TEST_CASE("digits round trip") {
  auto f = FieldCtx::build(5, 3);
  for (std::uint32_t x = 0; x < f->q(); ++x) CHECK(f->from_digits(f->digits(Elem{x})) == Elem{x});
  CHECK_THROWS_AS(f->elem(f->q()), Error);
}

TEST_CASE("contexts for different moduli are isomorphic") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}}) {
    auto a = FieldCtx::build(p, n);
    auto b = second_modulus_field(p, n);
    REQUIRE(b);
    REQUIRE(a->modulus() != b->modulus());
    const gf::Embedding phi(a, b);
    std::vector<bool> hit(b->q(), false);
    bool ok = true;
    for (std::uint32_t x = 0; x < a->q(); ++x) {
      hit[phi(Elem{x}).v] = true;
      for (std::uint32_t y = 0; y < a->q(); ++y) {
        ok = ok && phi(a->mul(Elem{x}, Elem{y})) == b->mul(phi(Elem{x}), phi(Elem{y}));
        ok = ok && phi(a->add(Elem{x}, Elem{y})) == b->add(phi(Elem{x}), phi(Elem{y}));
      }
    }
    CHECK(ok);
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
  }
}

TEST_CASE("subfield embedding") {
  auto small = FieldCtx::build(2, 2);
  auto big = FieldCtx::build(2, 6);
  const gf::Embedding phi(small, big);
  for (std::uint32_t x = 0; x < 4; ++x) {
    CHECK(big->in_subfield(phi(Elem{x}), 2));
    for (std::uint32_t y = 0; y < 4; ++y) CHECK(phi(small->mul(Elem{x}, Elem{y})) == big->mul(phi(Elem{x}), phi(Elem{y})));
  }
  CHECK_THROWS_AS(gf::Embedding(FieldCtx::build(2, 4), big), Error);
}
