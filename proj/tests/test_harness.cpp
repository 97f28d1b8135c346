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

#include "cdu/cddt.hpp"
#include "cdu/delta_class.hpp"
#include "cdu/error.hpp"
#include "cdu/family.hpp"
#include "cdu/report.hpp"
#include "cdu/suites.hpp"

using namespace cdu;
using namespace cdu::harness;
using families::FamilyId;
using gf::Elem;

namespace {

SuiteConfig config_m(std::uint32_t m) {
  SuiteConfig cfg;
  cfg.m = m;
  cfg.workers = 1;
  return cfg;
}

}  // namespace

TEST_CASE("delta classes") {
  auto f8 = gf::FieldCtx::build(2, 3);
  CHECK(classify_delta(*f8, 1, Elem{0}, FamilyId::B1) == DeltaClass::Gamma0);
  CHECK(classify_delta(*f8, 1, Elem{1}, FamilyId::B1) == DeltaClass::Gamma1);
  CHECK(classify_delta(*f8, 1, Elem{1}, FamilyId::B2) == DeltaClass::Complement);
  auto f64 = gf::FieldCtx::build(2, 6);
  std::map<DeltaClass, int> hist;
  for (std::uint32_t d = 0; d < 64; ++d) hist[classify_delta(*f64, 2, Elem{d}, FamilyId::B1)]++;
  CHECK(hist[DeltaClass::Gamma1] == 16);
  CHECK(hist[DeltaClass::Gamma0] == 16);
  CHECK(hist[DeltaClass::Complement] == 32);
  CHECK(delta_class_name(DeltaClass::Gamma1) == "Gamma1");
}

TEST_CASE("c classes") {
  auto f = gf::FieldCtx::build(2, 6);
  std::map<CClass, int> hist;
  for (std::uint32_t c = 0; c < 64; ++c) hist[classify_c(*f, 2, Elem{c})]++;
  CHECK(hist[CClass::One] == 1);
  CHECK(hist[CClass::Subfield] == 3);
  CHECK(hist[CClass::Outside] == 60);
}

TEST_CASE("expectations") {
  CHECK(satisfies(Expectation::PcN, 1, 2));
  CHECK_FALSE(satisfies(Expectation::PcN, 2, 2));
  CHECK(satisfies(Expectation::APcN, 2, 2));
  CHECK(satisfies(Expectation::AtMost4, 3, 2));
  CHECK_FALSE(satisfies(Expectation::AtMost4, 5, 2));
  CHECK_FALSE(satisfies(Expectation::Exactly3, 2, 3));
  CHECK(satisfies(Expectation::ExactlyP, 5, 5));
  CHECK(expectation_name(Expectation::ExactlyP, 5) == "=5");
}

TEST_CASE("suite names") {
  CHECK(all_suites().size() == 12);
  for (auto id : all_suites()) CHECK(parse_suite(suite_name(id)) == id);
  CHECK(parse_suite("l-charsum") == SuiteId::LCharSum);
  try {
    (void)parse_suite("T-B9");
    FAIL("unknown suite accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("first binary theorem at m=1") {
  const auto rep = run_suite(SuiteId::TB1, config_m(1));
  CHECK(rep.ok());
  CHECK(rep.results.size() == 8 * 7);
  int apcn = 0;
  for (const auto& r : rep.results) {
    if (r.params["c_class"] == "subfield") {
      CHECK(r.params["c"] == 0);
      CHECK(r.expected == "PcN");
    }
    if (r.params["delta_class"] == "Gamma1" && r.params["c_class"] == "outside") {
      CHECK(r.observed == 2);
      ++apcn;
    }
  }
  CHECK(apcn == 4 * 6);
  CHECK(rep.fields == std::vector<std::string>{"p=2,n=3,mod=1011"});
}

TEST_CASE("odd theorem at p=3, m=1") {
  SuiteConfig cfg = config_m(1);
  cfg.p = 3;
  cfg.strict = true;
  const auto rep = run_suite(SuiteId::TP5, cfg);
  CHECK(rep.ok());
  int seen = 0;
  for (const auto& r : rep.results) {
    CHECK(r.params["p"] == 3);
    if (r.params["delta"] == 0 && r.params["c_class"] == "outside") {
      CHECK(r.observed == 3);
      ++seen;
    }
  }
  CHECK(seen == 6);
}

TEST_CASE("character-sum suite on a small field") {
  SuiteConfig cfg;
  cfg.p = 2;
  cfg.n = 3;
  cfg.samples = 100;
  const auto rep = run_suite(SuiteId::LCharSum, cfg);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0].pass);
  CHECK(rep.results[0].observed["mismatches"] == 0);
}

TEST_CASE("strict mode rejects parameters outside the hypotheses") {
  SuiteConfig cfg = config_m(4);
  cfg.strict = true;
  try {
    (void)run_suite(SuiteId::TB2, cfg);
    FAIL("m=4 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedParameters);
  }
}

TEST_CASE("exploratory cells are labeled and never failures") {
  const auto rep = run_suite(SuiteId::TT4, config_m(1));
  CHECK(rep.ok());
  CHECK(rep.exploratory() == rep.results.size());
  std::size_t failing = 0;
  for (const auto& r : rep.results) {
    CHECK(r.exploratory);
    CHECK_FALSE(r.note.empty());
    failing += !r.pass;
  }
  CHECK(failing > 0);
}

TEST_CASE("failed cells carry witnesses that re-verify") {
  const auto rep = run_suite(SuiteId::TT4, config_m(1));
  auto f = gf::FieldCtx::build(3, 2);
  std::size_t checked = 0;
  for (const auto& r : rep.results) {
    if (r.pass) continue;
    REQUIRE_FALSE(r.witnesses.empty());
    const auto inst = families::instantiate(FamilyId::T4, f, 1, Elem{r.params["delta"].get<std::uint32_t>()}, false);
    const auto table = families::as_lut(inst);
    const Elem c{r.params["c"].get<std::uint32_t>()};
    for (const auto& w : r.witnesses) {
      const Elem a{w["a"].get<std::uint32_t>()}, b{w["b"].get<std::uint32_t>()};
      CHECK(w["count"] == analysis::c_ddt_entry(table, c, a, b));
      CHECK(w["count"] == r.observed);
      CHECK(w["solutions"].size() == w["count"].get<std::size_t>());
      for (const auto& x : w["solutions"]) {
        const Elem ex{x.get<std::uint32_t>()};
        CHECK(f->sub(table.at(f->add(ex, a)), f->mul(c, table.at(ex))) == b);
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("reports are reproducible and schedule independent") {
  for (auto id : {SuiteId::TB1, SuiteId::LCM04, SuiteId::LPerm}) {
    SuiteConfig cfg = config_m(1);
    if (id == SuiteId::LCM04) {
      cfg.m.reset();
      cfg.p = 3;
      cfg.samples = 50;
    }
    const auto a = render(to_json(run_suite(id, cfg)));
    const auto b = render(to_json(run_suite(id, cfg)));
    cfg.workers = 3;
    const auto c = render(to_json(run_suite(id, cfg)));
    CHECK(a == b);
    CHECK(a == c);
    cfg.seed = 2;
    if (id == SuiteId::LCM04) CHECK(render(to_json(run_suite(id, cfg))) != a);
  }
}

TEST_CASE("suite report json") {
  const auto rep = run_suite(SuiteId::TB1, config_m(1));
  const auto j = to_json(rep);
  CHECK(j["schema"] == "cdu-report/1");
  CHECK(j["suite"] == "T-B1");
  CHECK(j["summary"]["cells"] == 56);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["fields"][0] == "p=2,n=3,mod=1011");
  CHECK(j["config"]["m"] == 1);
  CHECK(j["config"].find("workers") == j["config"].end());
  CHECK(j["results"].size() == 56);
  CHECK_FALSE(j["findings"].empty());
}

TEST_CASE("uniformity report json") {
  auto f = families::family_field(FamilyId::P5, 3, 1);
  const auto table = families::as_lut(families::instantiate(FamilyId::P5, f, 1, Elem{0}, true));
  const auto r = analysis::c_uniformity(table, Elem{1});
  const auto j = to_json(r, *f, FunctionLabel{"p5", 1, 0});
  CHECK(j["field"]["modulus"] == f->spec_string());
  CHECK(j["family"] == "p5");
  CHECK(j["c"] == 1);
  CHECK(j["max"] == r.max_entry);
  CHECK(j["excluded"]["9"] == 1);
  CHECK(j["witnesses"].size() == r.witnesses.size());
  const auto anon = to_json(r, *f, FunctionLabel{});
  CHECK(anon["family"].is_null());
  CHECK(anon["delta"].is_null());
}

TEST_CASE("lemma suites pass on reduced grids") {
  SuiteConfig cfg;
  cfg.m = 1;
  CHECK(run_suite(SuiteId::LWalshVanish, cfg).ok());
  CHECK(run_suite(SuiteId::LAtMost4, cfg).ok());
  CHECK(run_suite(SuiteId::LAB, cfg).ok());
  SuiteConfig qw;
  qw.p = 3;
  qw.n = 3;
  qw.samples = 30;
  CHECK(run_suite(SuiteId::LQuadWalsh, qw).ok());
}

TEST_CASE("sign findings for the odd family") {
  SuiteConfig cfg;
  cfg.family = FamilyId::P5;
  const auto rep = run_suite(SuiteId::LPerm, cfg);
  CHECK(rep.ok());
  std::size_t minus_sufficient = 0, plus_insufficient = 0;
  for (const auto& line : rep.findings) {
    if (line.find("(Tr-1)/Tr branch") != std::string::npos && line.find(", sufficient") != std::string::npos) {
      ++minus_sufficient;
    }
    if (line.find("p=3") != std::string::npos && line.find("(Tr+1)/Tr branch") != std::string::npos &&
        line.find("not sufficient") != std::string::npos) {
      ++plus_insufficient;
    }
  }
  CHECK(minus_sufficient == 3);
  CHECK(plus_insufficient == 2);
}
