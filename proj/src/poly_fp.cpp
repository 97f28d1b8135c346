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

#include "cdu/poly_fp.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <stdexcept>

namespace cdu::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < f.size() ? f[i] : 0u) + std::uint64_t(i < g.size() ? g[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s % p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t a = i < f.size() ? f[i] : 0u;
    std::uint64_t b = i < g.size() ? g[i] : 0u;
    r[i] = static_cast<std::uint32_t>((a + p - b) % p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t(f[i]) * g[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::tie(t, nt) = std::pair{nt, t - qt * nt};
    std::tie(r, nr) = std::pair{nr, r - qt * nr};
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& quot, Poly& rem) {
  if (g.empty()) throw std::domain_error("poly divmod by zero polynomial");
  rem = f;
  trim(rem);
  quot.clear();
  const int dg = degree(g);
  if (degree(rem) < dg) return;
  quot.assign(static_cast<std::size_t>(degree(rem) - dg + 1), 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (!rem.empty() && degree(rem) >= dg) {
    const int shift = degree(rem) - dg;
    const std::uint64_t coef = rem.back() * lead_inv % p;
    quot[static_cast<std::size_t>(shift)] = static_cast<std::uint32_t>(coef);
    for (int j = 0; j <= dg; ++j) {
      auto& slot = rem[static_cast<std::size_t>(shift + j)];
      slot = static_cast<std::uint32_t>((slot + p - coef * g[static_cast<std::size_t>(j)] % p) % p);
    }
    trim(rem);
  }
}

Poly mod(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly q, r;
  divmod(f, g, p, q, r);
  return r;
}

Poly make_monic(const Poly& f, std::uint32_t p) {
  if (f.empty()) return f;
  const std::uint64_t li = inv_mod(f.back(), p);
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<std::uint32_t>(f[i] * li % p);
  return r;
}

Poly gcd(Poly f, Poly g, std::uint32_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(f, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  while (e > 0) {
    if (e & 1u) result = mod(mul(result, b, p), m, p);
    e >>= 1;
    if (e) b = mod(mul(b, b, p), m, p);
  }
  return result;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

namespace {

// X^(p^k) mod f by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, std::uint32_t p, std::uint32_t k) {
  Poly x{0, 1};
  Poly r = mod(x, f, p);
  for (std::uint32_t i = 0; i < k; ++i) r = powmod(r, p, f, p);
  return r;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = make_monic(f, p);
  const Poly x{0, 1};
  // X^(p^n) == X mod f
  if (sub(frobenius_power_of_x(f, p, static_cast<std::uint32_t>(n)), mod(x, f, p), p) != Poly{}) {
    return false;
  }
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    const auto k = static_cast<std::uint32_t>(n / static_cast<int>(r));
    Poly h = sub(frobenius_power_of_x(f, p, k), x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace cdu::poly
