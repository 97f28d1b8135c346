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

#include "cdu/report.hpp"

namespace cdu::harness {

namespace {

Json spectrum_json(const std::map<std::uint32_t, std::uint64_t>& s) {
  Json j = Json::object();
  for (auto [k, v] : s) j[std::to_string(k)] = v;
  return j;
}

Json config_json(const SuiteConfig& c) {
  Json j{{"seed", c.seed},
         {"strict", c.strict},
         {"exhaustive_limit", c.exhaustive_limit},
         {"sample_delta", c.sample_delta},
         {"sample_c", c.sample_c}};
  if (c.samples) j["samples"] = c.samples;
  if (c.p) j["p"] = *c.p;
  if (c.n) j["n"] = *c.n;
  if (c.m) j["m"] = *c.m;
  if (c.family) j["family"] = families::family_name(*c.family);
  if (c.modulus) j["modulus"] = gf::format_spec(*c.modulus);
  return j;
}

Json claim_json(const ClaimResult& r) {
  Json j{{"params", r.params}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}};
  if (r.exploratory) j["exploratory"] = true;
  if (r.discrepancy) j["discrepancy"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace

Json field_json(const gf::FieldCtx& ctx) {
  return Json{{"p", ctx.p()}, {"n", ctx.n()}, {"q", ctx.q()}, {"modulus", ctx.spec_string()}};
}

Json to_json(const SuiteReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(claim_json(r));
  return Json{{"schema", kSchema},
              {"suite", report.suite},
              {"config", config_json(report.config)},
              {"fields", report.fields},
              {"summary",
               {{"cells", report.results.size()},
                {"passed", report.passed()},
                {"failed", report.failed()},
                {"exploratory", report.exploratory()},
                {"discrepancies", report.discrepancies()}}},
              {"findings", report.findings},
              {"results", results}};
}

Json to_json(const analysis::CDdtReport& report, const gf::FieldCtx& ctx, const FunctionLabel& label) {
  Json w = Json::array();
  for (auto [a, b] : report.witnesses) w.push_back(Json::array({a, b}));
  Json j{{"schema", kSchema}, {"field", field_json(ctx)}};
  j["family"] = label.family.empty() ? Json(nullptr) : Json(label.family);
  if (label.m) j["m"] = *label.m;
  j["delta"] = label.delta ? Json(*label.delta) : Json(nullptr);
  j["c"] = report.c.v;
  j["max"] = report.max_entry;
  j["classification"] = report.classification();
  j["spectrum"] = spectrum_json(report.spectrum);
  if (!report.excluded.empty()) j["excluded"] = spectrum_json(report.excluded);
  j["witnesses"] = w;
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cdu::harness
