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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdu {

enum class Errc {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  UnsupportedFieldSize,
  InvalidElement,
  DivisionByZero,
  NonDivisorSubfieldDegree,
  MixedCyclotomicOrder,
  CyclotomicOverflow,
  ShapeMismatch,
  HypothesisViolation,
  UnsupportedFamily,
  NonIntegralCount,
  PreconditionViolation,
  WitnessNotFound,
  UnsupportedParameters,
  ParseError,
};

std::string_view errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonDivisorSubfieldDegree: return "NonDivisorSubfieldDegree";
    case Errc::MixedCyclotomicOrder: return "MixedCyclotomicOrder";
    case Errc::CyclotomicOverflow: return "CyclotomicOverflow";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::NonIntegralCount: return "NonIntegralCount";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::UnsupportedParameters: return "UnsupportedParameters";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cdu
