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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdu/family.hpp"

namespace cdu::harness {

using Json = nlohmann::ordered_json;

/// Uniformity expectations stated by the theorems.
enum class Expectation { PcN, APcN, AtMost4, Exactly3, ExactlyP };

std::string expectation_name(Expectation e, std::uint32_t p);
bool satisfies(Expectation e, std::uint32_t observed, std::uint32_t p) noexcept;

struct ClaimResult {
  std::string suite;
  Json params = Json::object();
  std::string expected;
  Json observed;
  bool pass = false;
  /// Parameters outside the stated hypotheses; never counted as a failure.
  bool exploratory = false;
  /// Deviation that is reported but not counted as a failure.
  bool discrepancy = false;
  std::string note;
  Json witnesses = Json::array();

  /// A failure counts against the suite.
  bool counts_as_failure() const noexcept { return !pass && !exploratory && !discrepancy; }
};

struct SuiteConfig {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> m;
  std::optional<families::FamilyId> family;
  /// Modulus applied to every field of matching (p, n).
  std::optional<gf::FieldSpec> modulus;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  /// Cells are exhaustive when q <= exhaustive_limit and sampled otherwise.
  std::uint32_t exhaustive_limit = 128;
  std::uint32_t sample_delta = 20;
  std::uint32_t sample_c = 40;
  /// Random instance count for the randomized lemma suites (0 keeps each suite's default).
  std::uint32_t samples = 0;
  bool strict = false;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<std::string> fields;  // spec strings in first-use order
  std::vector<ClaimResult> results;
  std::vector<std::string> findings;

  std::size_t failed() const;
  std::size_t passed() const;
  std::size_t exploratory() const;
  std::size_t discrepancies() const;
  bool ok() const { return failed() == 0; }
};

}  // namespace cdu::harness
