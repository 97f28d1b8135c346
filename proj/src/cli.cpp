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

#include "cdu/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cdu/cddt.hpp"
#include "cdu/cubic.hpp"
#include "cdu/error.hpp"
#include "cdu/family.hpp"
#include "cdu/linearized.hpp"
#include "cdu/parallel.hpp"
#include "cdu/report.hpp"
#include "cdu/suites.hpp"
#include "cdu/trinomial.hpp"
#include "cdu/walsh.hpp"

namespace cdu::harness {

namespace {

struct Options {
  std::optional<std::uint32_t> p, n, m;
  std::string mod;
  std::string family;
  std::string delta = "0";
  std::string c;
  std::string format;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::uint32_t sample = 0;
  std::uint32_t exhaustive_limit = 128;
  bool strict = false;
  std::string output;

  std::string x = "0";
  std::string suite;
  std::string u = "1";
  std::string kind = "trinomial";
  std::uint32_t k = 1;
  std::string a = "0", b = "0", b1 = "0", b0 = "0";
  std::string coeffs;
};

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty number");
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad number '" + s + "'");
  }
  if (pos != s.size()) throw Error(Errc::ParseError, "bad number '" + s + "'");
  return v;
}

// An element index, or comma-separated digits with the most significant first.
gf::Elem parse_elem(const gf::FieldCtx& f, const std::string& text) {
  if (text.find(',') == std::string::npos) return f.elem(parse_uint(text));
  std::vector<std::uint32_t> digits;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto d = parse_uint(tok);
    if (d >= f.p()) throw Error(Errc::ParseError, "digit " + tok + " >= p");
    digits.push_back(static_cast<std::uint32_t>(d));
  }
  if (digits.size() > f.n()) throw Error(Errc::ParseError, "too many digits for n = " + std::to_string(f.n()));
  return f.from_digits({digits.rbegin(), digits.rend()});
}

std::optional<gf::FieldSpec> modulus_spec(const Options& o) {
  if (o.mod.empty()) return std::nullopt;
  if (o.mod.find('=') != std::string::npos) return gf::parse_spec(o.mod);
  if (!o.p || !o.n) throw Error(Errc::ParseError, "--mod without p= and n= needs --p and --n");
  return gf::parse_spec("p=" + std::to_string(*o.p) + ",n=" + std::to_string(*o.n) + ",mod=" + o.mod);
}

gf::FieldPtr plain_field(const Options& o) {
  if (auto spec = modulus_spec(o)) return gf::FieldCtx::build(*spec);
  return gf::FieldCtx::build(o.p.value_or(2), o.n.value_or(3));
}

struct Bound {
  families::FamilyInstance inst;
  analysis::FunctionTable table;
};

Bound bind_family(const Options& o) {
  if (o.family.empty()) throw Error(Errc::ParseError, "--family is required");
  const auto id = families::parse_family(o.family);
  const std::uint32_t m = o.m.value_or(1);
  gf::FieldPtr f;
  if (auto spec = modulus_spec(o)) {
    f = gf::FieldCtx::build(*spec);
  } else {
    f = families::family_field(id, o.p.value_or(3), m);
  }
  auto inst = families::instantiate(id, f, m, parse_elem(*f, o.delta), o.strict);
  auto table = families::as_lut(inst);
  return {std::move(inst), std::move(table)};
}

FunctionLabel label_of(const families::FamilyInstance& inst) {
  return {std::string(families::family_name(inst.id)), inst.m, inst.delta.v};
}

std::string csv_cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::string s = j.dump();
  if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig cfg;
  cfg.p = o.p;
  cfg.n = o.n;
  cfg.m = o.m;
  if (!o.family.empty()) cfg.family = families::parse_family(o.family);
  cfg.modulus = modulus_spec(o);
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.exhaustive_limit = o.exhaustive_limit;
  if (o.sample) {
    cfg.sample_delta = o.sample;
    cfg.sample_c = o.sample;
    cfg.samples = o.sample;
  }
  cfg.strict = o.strict;
  return cfg;
}

int cmd_field(const Options& o, std::ostream& out) {
  const auto f = plain_field(o);
  Json j = field_json(*f);
  j["generator"] = f->generator().v;
  j["generator_poly"] = f->to_string(f->generator());
  j["tables"] = f->has_tables();
  out << render(j);
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  const auto& f = *bound.inst.ctx;
  const gf::Elem x = parse_elem(f, o.x);
  Json j{{"field", field_json(f)},
         {"family", families::family_name(bound.inst.id)},
         {"m", bound.inst.m},
         {"delta", bound.inst.delta.v},
         {"s", bound.inst.s},
         {"x", x.v},
         {"value", families::evaluate(bound.inst, x).v}};
  if (families::has_expansion(bound.inst.id)) j["expanded"] = families::evaluate_expanded(bound.inst, x).v;
  if (families::has_trace_form(bound.inst.id)) j["trace_form"] = families::evaluate_trace_form(bound.inst, x).v;
  if (bound.inst.outside_hypotheses) j["outside_hypotheses"] = bound.inst.hypothesis_note;
  out << render(j);
  return 0;
}

int cmd_lut(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  if (o.format == "csv") {
    out << "x,value\n";
    for (std::size_t i = 0; i < bound.table.values.size(); ++i) out << i << ',' << bound.table.values[i] << '\n';
    return 0;
  }
  Json j{{"field", field_json(*bound.inst.ctx)},
         {"family", families::family_name(bound.inst.id)},
         {"m", bound.inst.m},
         {"delta", bound.inst.delta.v},
         {"permutation", analysis::is_permutation(bound.table)},
         {"values", bound.table.values}};
  out << render(j);
  return 0;
}

gf::Elem required_c(const Options& o, const gf::FieldCtx& f) {
  if (o.c.empty()) throw Error(Errc::ParseError, "--c is required");
  return parse_elem(f, o.c);
}

int cmd_ddt(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  const gf::Elem c = required_c(o, *bound.inst.ctx);
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::uint32_t a = 0; a < bound.inst.ctx->q(); ++a) rows.push_back(analysis::c_ddt_row(bound.table, c, gf::Elem{a}));
    out << render(Json{{"field", field_json(*bound.inst.ctx)}, {"c", c.v}, {"rows", rows}});
    return 0;
  }
  analysis::write_ddt_csv(out, bound.table, c);
  return 0;
}

int cmd_uniformity(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  const auto& f = *bound.inst.ctx;
  const auto rep = analysis::c_uniformity(bound.table, required_c(o, f));
  if (o.format == "csv") {
    out << "entry,count\n";
    for (auto [k, v] : rep.spectrum) out << k << ',' << v << '\n';
    return 0;
  }
  out << render(to_json(rep, f, label_of(bound.inst)));
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  const auto& f = *bound.inst.ctx;
  std::vector<gf::Elem> cs;
  for (std::uint32_t i = 0; i < f.q(); ++i) cs.emplace_back(i);
  const auto reports = analysis::full_c_sweep(bound.table, cs, resolve_workers(o.workers));
  if (o.format == "csv") {
    out << "c,max,classification\n";
    for (const auto& r : reports) out << r.c.v << ',' << r.max_entry << ',' << r.classification() << '\n';
    return 0;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, f, label_of(bound.inst)));
  out << render(arr);
  return 0;
}

int cmd_walsh(const Options& o, std::ostream& out) {
  const auto bound = bind_family(o);
  const auto& f = *bound.inst.ctx;
  const auto comp = analysis::component(bound.table, parse_elem(f, o.u));
  const auto spec = analysis::walsh_spectrum(comp);
  if (o.format == "csv") {
    out << "v,value,norm_squared\n";
    for (std::size_t v = 0; v < spec.size(); ++v) {
      out << v << ',' << csv_cell(spec[v].to_string()) << ',' << csv_cell(spec[v].norm_squared().to_string()) << '\n';
    }
    return 0;
  }
  Json arr = Json::array();
  for (std::size_t v = 0; v < spec.size(); ++v) {
    arr.push_back(Json{{"v", v}, {"value", spec[v].to_string()}, {"norm_squared", spec[v].norm_squared().to_string()}});
  }
  out << render(Json{{"field", field_json(f)}, {"u", o.u}, {"spectrum", arr}});
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SuiteConfig cfg = suite_config(o);
  std::vector<SuiteId> ids;
  if (o.suite == "all") {
    ids = all_suites();
  } else {
    ids = {parse_suite(o.suite)};
  }
  bool ok = true;
  std::ostringstream buf;
  if (o.format == "csv") buf << "suite,params,expected,observed,pass,exploratory,discrepancy\n";
  Json all = Json::array();
  for (auto id : ids) {
    const auto rep = run_suite(id, cfg);
    ok = ok && rep.ok();
    if (o.format == "csv") {
      for (const auto& r : rep.results) {
        buf << rep.suite << ',' << csv_cell(r.params) << ',' << csv_cell(r.expected) << ',' << csv_cell(r.observed)
            << ',' << (r.pass ? 1 : 0) << ',' << (r.exploratory ? 1 : 0) << ',' << (r.discrepancy ? 1 : 0) << '\n';
      }
    } else {
      all.push_back(to_json(rep));
    }
  }
  if (o.format != "csv") buf << render(ids.size() == 1 ? all.front() : Json{{"schema", kSchema}, {"reports", all}});
  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw Error(Errc::ParseError, "cannot write " + o.output);
    file << buf.str();
  }
  return ok ? 0 : 1;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto f = plain_field(o);
  if (o.kind == "trinomial") {
    const solvers::TrinomialInstance t{f, o.k, parse_elem(*f, o.a), parse_elem(*f, o.b)};
    const auto res = solvers::trinomial_roots(t);
    Json roots = Json::array();
    for (auto r : res.roots) roots.push_back(r.v);
    out << render(Json{{"field", field_json(*f)}, {"k", t.k}, {"g", t.g()}, {"l", t.l()},
                       {"alpha", res.alpha.v}, {"beta", res.beta.v}, {"closed_form", res.closed_form},
                       {"predicts_empty", res.predicts_empty}, {"roots", roots}});
    return 0;
  }
  if (o.kind == "cubic") {
    const auto res = solvers::cubic_roots_char2(f, parse_elem(*f, o.b1), parse_elem(*f, o.b0));
    Json roots = Json::array();
    for (auto r : res.roots) roots.push_back(r.v);
    Json j{{"field", field_json(*f)}, {"roots", roots}, {"trace_condition", res.trace_condition},
           {"predicts_three", res.predicts_three}};
    j["companion_cubes"] = res.companion_cubes ? Json(*res.companion_cubes) : Json(nullptr);
    out << render(j);
    return 0;
  }
  if (o.kind == "kernel") {
    solvers::LinearizedPoly l(f);
    std::stringstream ss(o.coeffs);
    std::string tok;
    std::uint32_t i = 0;
    while (std::getline(ss, tok, ',')) l.add_term(i++, f->elem(parse_uint(tok)));
    const auto k = solvers::linearized_kernel(l);
    Json basis = Json::array();
    for (auto b : k.basis) basis.push_back(b.v);
    out << render(Json{{"field", field_json(*f)}, {"dim", k.dim}, {"basis", basis}});
    return 0;
  }
  throw Error(Errc::ParseError, "--kind must be trinomial, cubic or kernel");
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"c-differential uniformity laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", o.p, "characteristic");
  app.add_option("--n", o.n, "extension degree");
  app.add_option("--m", o.m, "subfield degree");
  app.add_option("--mod", o.mod, "modulus: p=..,n=..,mod=.. or digits, most significant first");
  app.add_option("--family", o.family, "b1, b2, b3, t4 or p5");
  app.add_option("--delta", o.delta, "element index or comma-separated digits");
  app.add_option("--c", o.c, "element index or comma-separated digits");
  app.add_option("--format", o.format, "json or csv (ddt defaults to csv, everything else to json)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--workers", o.workers, "worker threads (default: CDU_WORKERS or 1)");
  app.add_option("--sample", o.sample, "per-class sample size and random instance count");
  app.add_option("--exhaustive-limit", o.exhaustive_limit, "largest q swept exhaustively");
  app.add_flag("--strict", o.strict, "reject parameters outside the stated hypotheses");
  app.add_option("-o,--output", o.output, "write the verify report to a file");

  auto* field = app.add_subcommand("field", "print field context");
  auto* eval = app.add_subcommand("eval", "evaluate a family at one point");
  eval->add_option("--x", o.x, "input element");
  auto* lut = app.add_subcommand("lut", "dump the value table");
  auto* ddt = app.add_subcommand("ddt", "c-DDT for one c");
  auto* uni = app.add_subcommand("uniformity", "c-differential uniformity report");
  auto* sweep = app.add_subcommand("sweep", "uniformity for every c");
  auto* walsh = app.add_subcommand("walsh", "Walsh spectrum of x -> Tr(u F(x))");
  walsh->add_option("--u", o.u, "component multiplier");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name or 'all'")->required();
  auto* solve = app.add_subcommand("solve", "trinomial, cubic or kernel solver");
  solve->add_option("--kind", o.kind, "trinomial, cubic or kernel");
  solve->add_option("--k", o.k, "Frobenius step");
  solve->add_option("--a", o.a, "trinomial linear coefficient");
  solve->add_option("--b", o.b, "trinomial constant");
  solve->add_option("--b1", o.b1, "cubic linear coefficient");
  solve->add_option("--b0", o.b0, "cubic constant");
  solve->add_option("--coeffs", o.coeffs, "linearized coefficients as element indices, X first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*field) return cmd_field(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*lut) return cmd_lut(o, out);
    if (*ddt) return cmd_ddt(o, out);
    if (*uni) return cmd_uniformity(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*walsh) return cmd_walsh(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*solve) return cmd_solve(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cdu::harness
