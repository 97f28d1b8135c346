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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cdu/field.hpp"

namespace cdu::cyc {

__extension__ using Int = __int128;
__extension__ using UInt = unsigned __int128;

/// Exact element of Z[w], w = exp(2*pi*i/p), stored as coefficients of
/// 1, w, ..., w^(p-2). The w^(p-1) coordinate is eliminated with
/// 1 + w + ... + w^(p-1) = 0, so equality is coefficient-wise.
///
/// All arithmetic is overflow checked (CyclotomicOverflow).
class CycInt {
 public:
  explicit CycInt(std::uint32_t p);

  static CycInt integer(std::uint32_t p, Int value);
  /// w^j for any integer j.
  static CycInt root(std::uint32_t p, std::int64_t j);
  /// sum_j counts[j] * w^j, counts indexed by exponent mod p.
  static CycInt from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  bool operator==(const CycInt& o) const = default;

  CycInt pow(std::uint64_t e) const;
  /// w -> w^(p-1).
  CycInt conjugate() const;
  /// a * conjugate(a).
  CycInt norm_squared() const;

  bool is_zero() const noexcept;
  bool is_rational_integer() const noexcept;
  /// Value of a rational integer (PreconditionViolation otherwise).
  Int rational_value() const;
  /// Coefficient-wise exact division (NonIntegralCount when inexact).
  CycInt exact_div(Int d) const;

  std::complex<double> to_complex() const;
  /// "c0 + c1*w + ..." with zero terms dropped; "0" for zero.
  std::string to_string() const;

 private:
  void require_same(const CycInt& o) const;
  std::uint32_t p_;
  std::vector<Int> c_;
};

std::string int_to_string(Int v);

/// sum over x in F_q of w^Tr(u*x).
CycInt char_sum(const gf::FieldCtx& ctx, gf::Elem u);

}  // namespace cdu::cyc
