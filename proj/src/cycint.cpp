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

#include "cdu/cycint.hpp"

#include <cmath>
#include <numbers>

#include "cdu/error.hpp"

namespace cdu::cyc {

namespace {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::CyclotomicOverflow, "addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::CyclotomicOverflow, "subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::CyclotomicOverflow, "multiplication");
  return r;
}

// Fold a length-p vector indexed by exponent into canonical form.
std::vector<Int> reduce(std::vector<Int> full, std::uint32_t p) {
  const Int top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& v : full) v = checked_sub(v, top);
  }
  return full;
}

}  // namespace

std::string int_to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  UInt u = neg ? static_cast<UInt>(-(v + 1)) + 1 : static_cast<UInt>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0) {
  if (p < 2) throw Error(Errc::NonPrimeCharacteristic, "cyclotomic order must be prime");
}

CycInt CycInt::integer(std::uint32_t p, Int value) {
  CycInt r(p);
  r.c_[0] = value;
  return r;
}

CycInt CycInt::root(std::uint32_t p, std::int64_t j) {
  std::vector<std::int64_t> counts(p, 0);
  std::int64_t e = j % static_cast<std::int64_t>(p);
  if (e < 0) e += p;
  counts[static_cast<std::size_t>(e)] = 1;
  return from_exponent_counts(p, counts);
}

CycInt CycInt::from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts) {
  if (counts.size() != p) throw Error(Errc::ShapeMismatch, "exponent count vector must have length p");
  std::vector<Int> full(counts.begin(), counts.end());
  CycInt r(p);
  r.c_ = reduce(std::move(full), p);
  return r;
}

void CycInt::require_same(const CycInt& o) const {
  if (p_ != o.p_) {
    throw Error(Errc::MixedCyclotomicOrder, std::to_string(p_) + " vs " + std::to_string(o.p_));
  }
}

CycInt CycInt::operator+(const CycInt& o) const {
  require_same(o);
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  require_same(o);
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(c_[i], o.c_[i]);
  return r;
}

CycInt CycInt::operator-() const { return CycInt(p_) - *this; }

CycInt CycInt::operator*(const CycInt& o) const {
  require_same(o);
  std::vector<Int> full(p_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      auto& slot = full[(i + j) % p_];
      slot = checked_add(slot, checked_mul(c_[i], o.c_[j]));
    }
  }
  CycInt r(p_);
  r.c_ = reduce(std::move(full), p_);
  return r;
}

CycInt CycInt::pow(std::uint64_t e) const {
  CycInt result = integer(p_, 1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycInt CycInt::conjugate() const {
  std::vector<Int> full(p_, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) full[(p_ - j) % p_] = c_[j];
  CycInt r(p_);
  r.c_ = reduce(std::move(full), p_);
  return r;
}

CycInt CycInt::norm_squared() const { return *this * conjugate(); }

bool CycInt::is_zero() const noexcept {
  for (auto v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool CycInt::is_rational_integer() const noexcept {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

Int CycInt::rational_value() const {
  if (!is_rational_integer()) throw Error(Errc::PreconditionViolation, "not a rational integer: " + to_string());
  return c_[0];
}

CycInt CycInt::exact_div(Int d) const {
  if (d == 0) throw Error(Errc::DivisionByZero, "cyclotomic division by zero");
  CycInt r(p_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] % d != 0) {
      throw Error(Errc::NonIntegralCount, to_string() + " is not divisible by " + int_to_string(d));
    }
    r.c_[j] = c_[j] / d;
  }
  return r;
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
    acc += static_cast<double>(c_[j]) * std::polar(1.0, angle);
  }
  return acc;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += int_to_string(c_[j]);
    if (j == 1) out += "*w";
    if (j > 1) out += "*w^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

CycInt char_sum(const gf::FieldCtx& ctx, gf::Elem u) {
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint32_t i = 0; i < ctx.q(); ++i) ++counts[ctx.abs_trace(ctx.mul(u, gf::Elem{i}))];
  return CycInt::from_exponent_counts(ctx.p(), counts);
}

}  // namespace cdu::cyc
