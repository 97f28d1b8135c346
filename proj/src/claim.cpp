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

#include "cdu/claim.hpp"

#include <algorithm>

namespace cdu::harness {

std::string expectation_name(Expectation e, std::uint32_t p) {
  switch (e) {
    case Expectation::PcN: return "PcN";
    case Expectation::APcN: return "APcN";
    case Expectation::AtMost4: return "<=4";
    case Expectation::Exactly3: return "=3";
    case Expectation::ExactlyP: return "=" + std::to_string(p);
  }
  return "?";
}

bool satisfies(Expectation e, std::uint32_t observed, std::uint32_t p) noexcept {
  switch (e) {
    case Expectation::PcN: return observed == 1;
    case Expectation::APcN: return observed == 2;
    case Expectation::AtMost4: return observed <= 4;
    case Expectation::Exactly3: return observed == 3;
    case Expectation::ExactlyP: return observed == p;
  }
  return false;
}

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return r.counts_as_failure(); }));
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                [](const ClaimResult& r) { return r.pass && !r.exploratory; }));
}

std::size_t SuiteReport::exploratory() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return r.exploratory; }));
}

std::size_t SuiteReport::discrepancies() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return r.discrepancy; }));
}

}  // namespace cdu::harness
