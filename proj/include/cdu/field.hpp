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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdu/poly_fp.hpp"

namespace cdu::gf {

/// Element of GF(p^n) encoded as the base-p integer of its residue
/// polynomial coefficients (least significant digit = constant term).
struct Elem {
  std::uint32_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t index) : v(index) {}
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  /// Monic degree-n modulus, constant term first. Empty selects the default.
  poly::Poly modulus;
};

/// "p=2,n=6,mod=1011011": modulus digits most significant first, packed for
/// p = 2 and comma separated for odd p.
std::string format_spec(const FieldSpec& spec);
FieldSpec parse_spec(std::string_view text);

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Immutable context for arithmetic in GF(p^n).
///
/// Multiplication, inversion and powers go through exp/log tables relative to
/// a fixed primitive element when q <= kTableThreshold and through residue
/// polynomial arithmetic otherwise.
class FieldCtx {
 public:
  static constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  /// Throws NonPrimeCharacteristic, ReducibleModulus, DegreeMismatch.
  static FieldPtr build(const FieldSpec& spec);
  static FieldPtr build(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  const poly::Poly& modulus() const noexcept { return modulus_; }
  FieldSpec spec() const { return {p_, n_, modulus_}; }
  std::string spec_string() const { return format_spec(spec()); }
  bool has_tables() const noexcept { return !exp_.empty(); }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// The prime-field element k mod p.
  Elem scalar(std::int64_t k) const noexcept;
  /// Range-checked index -> element (InvalidElement).
  Elem elem(std::uint64_t index) const;
  bool valid(Elem x) const noexcept { return x.v < q_; }

  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  std::uint32_t digit(Elem x, std::uint32_t i) const noexcept { return (x.v / pow_p_[i]) % p_; }
  /// The element X^i of the polynomial basis.
  Elem basis(std::uint32_t i) const noexcept { return Elem{pow_p_[i]}; }

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  /// k * x for k in F_p.
  Elem scale(std::uint32_t k, Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  /// Schoolbook product of residue polynomials; never consults the tables.
  Elem mul_poly(Elem x, Elem y) const noexcept;
  Elem inv(Elem x) const;  // DivisionByZero
  Elem div(Elem x, Elem y) const;
  /// x^e; exponents are reduced mod q-1 only for x != 0 and 0^0 = 1.
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  /// x^(p^k) with k taken mod n.
  Elem frobenius(Elem x, std::uint64_t k) const noexcept;
  /// Sum over the Frobenius^m orbit: Tr_m^n(x). Requires m | n.
  Elem rel_trace(Elem x, std::uint32_t m) const;
  /// Absolute trace as an element of F_p in [0, p).
  std::uint32_t abs_trace(Elem x) const noexcept;
  bool in_subfield(Elem x, std::uint32_t m) const;
  /// All elements of the subfield F_{p^m}, in increasing index order.
  std::vector<Elem> subfield_elements(std::uint32_t m) const;

  /// Whether x = y^d for some y in this field (0 counts as a d-th power).
  bool is_dth_power(Elem x, std::uint64_t d) const noexcept;
  /// Some y with y^d = x, if one exists.
  std::optional<Elem> dth_root(Elem x, std::uint64_t d) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem x) const;
  Elem generator() const noexcept { return generator_; }
  /// Discrete log w.r.t. generator() (tables only, x != 0).
  std::uint32_t log(Elem x) const noexcept { return log_[x.v]; }
  Elem exp(std::uint64_t e) const noexcept { return Elem{exp_[e % (q_ - 1)]}; }

  /// Residue polynomial text such as "X^2 + 2*X + 1".
  std::string to_string(Elem x) const;

 private:
  FieldCtx() = default;
  void init_tables();
  Elem pow_slow(Elem x, std::uint64_t e) const noexcept;
  void require_divisor(std::uint32_t m) const;

  std::uint32_t p_ = 2;
  std::uint32_t n_ = 1;
  std::uint32_t q_ = 2;
  poly::Poly modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..n
  std::vector<std::uint32_t> exp_;    // exp_[i] = g^i, size q-1
  std::vector<std::uint32_t> log_;    // log_[x], x != 0
  // frob_images_[k][j] = (X^j)^(p^k) for 0 <= k, j < n
  std::vector<std::vector<Elem>> frob_images_;
  std::vector<std::uint32_t> basis_trace_;  // abs trace of X^j
  Elem generator_{};
};

/// An injective field homomorphism GF(p^a) -> GF(p^b), a | b, obtained by
/// sending X to a root of the source modulus in the target field.
class Embedding {
 public:
  /// Throws ShapeMismatch when the characteristics differ or a does not divide b.
  Embedding(FieldPtr from, FieldPtr to);
  Elem operator()(Elem x) const;
  Elem image_of_generator() const noexcept { return root_; }
  const FieldCtx& source() const noexcept { return *from_; }
  const FieldCtx& target() const noexcept { return *to_; }

 private:
  FieldPtr from_;
  FieldPtr to_;
  Elem root_;
  std::vector<Elem> powers_;  // root^j, j < a
};

}  // namespace cdu::gf
