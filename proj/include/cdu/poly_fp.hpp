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
#include <vector>

/// Dense univariate polynomials over a prime field F_p.
///
/// Coefficients are stored constant term first and kept trimmed: the zero
/// polynomial is the empty vector and the last stored coefficient is nonzero.
namespace cdu::poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& f, const Poly& g, std::uint32_t p);
Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
Poly mod(const Poly& f, const Poly& g, std::uint32_t p);
void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& quot, Poly& rem);
Poly gcd(Poly f, Poly g, std::uint32_t p);
Poly make_monic(const Poly& f, std::uint32_t p);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);

/// Rabin's irreducibility test for a polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Least monic irreducible of degree n, ordering candidates by the base-p
/// integer whose digits are the coefficients (leading coefficient most significant).
Poly least_irreducible(std::uint32_t p, std::uint32_t n);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace cdu::poly
