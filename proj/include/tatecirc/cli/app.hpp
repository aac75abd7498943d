// Copyright 2026 The tatecirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tatecirc/cli/evaluator.hpp"
#include "tatecirc/cli/json.hpp"
#include "tatecirc/cli/parser.hpp"
#include "tatecirc/cli/suites.hpp"
#include "tatecirc/renorm.hpp"

/// Command-line front end. Exit codes: 0 pass, 1 identity failure,
/// 2 usage, parse or evaluation error.
namespace tatecirc::cli {

enum ExitCode { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

namespace detail {

inline void print_report_text(const Report& r, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) ++passed;
    out << (c.pass ? "PASS " : "FAIL ") << c.identity;
    if (c.first_defect)
      out << ": first defect at index " << c.first_defect->index << ", expected " << c.first_defect->expected
          << ", got " << c.first_defect->actual;
    if (c.note) out << " [" << *c.note << "]";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "suite " << r.suite << " order " << r.order << " seed " << r.seed << ": " << (r.pass() ? "pass" : "FAIL")
      << " (" << passed << "/" << r.checks.size() << " checks)\n";
}

inline std::string renorm_power(const std::string& gen, unsigned e) {
  std::string base = gen == "x" ? "c" : gen == "y" ? "q" : gen;
  return base + "^-" + std::to_string(e);
}

}  // namespace detail

struct Options {
  long order = 8;
  std::uint64_t seed = 1;
  bool json = false;
  std::string ring = "auto";
  std::optional<long> defect;
  std::string at = "0";
  std::string out_file;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graded rings, boundary maps and truncated series for circle-action Tate theories", "tatecirc"};
  app.require_subcommand(1);
  Options o;
  long suite_order = 16;
  std::string expr, suite, which;
  long adams_k = 1;

  auto add_order = [&](CLI::App* sub, long* target) {
    sub->add_option("--order,-n", *target, "truncation order")->check(CLI::NonNegativeNumber);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", expr, "expression")->required();
  add_order(eval, &o.order);
  eval->add_option("--ring", o.ring, "ring hint: auto, tate_h, tate_k, Q, Z");
  add_json(eval);

  auto suite_opts = [&](CLI::App* sub, bool named) {
    if (named) sub->add_option("suite", suite, "suite name or all")->required();
    add_order(sub, &suite_order);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--defect", o.defect, "inject a defect at this term index");
    add_json(sub);
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  suite_opts(verify, true);
  auto* report = app.add_subcommand("report", "write a full verification report");
  suite_opts(report, true);
  report->add_option("--out,-o", o.out_file, "output file (default stdout)");
  auto* cartier = app.add_subcommand("cartier", "Cartier relation on the bivariate grid");
  suite_opts(cartier, false);
  auto* prop2 = app.add_subcommand("prop2", "(1 - q^-1 T)^-1 = (1 + T)^beta");
  suite_opts(prop2, false);

  auto* expand = app.add_subcommand("expand", "expand an element of Z[q, q^-1, (1 - q)^-1] at a puncture");
  expand->add_option("expr", expr, "expression")->required();
  expand->add_option("--at", o.at, "puncture: 0, 1 or inf")->check(CLI::IsMember({"0", "1", "inf"}));
  add_order(expand, &o.order);
  add_json(expand);

  auto* renorm_cmd = app.add_subcommand("renorm", "renormalization ratio series");
  renorm_cmd->add_option("ratio", which, "b/cinv, beta/qinv or b/beta")
      ->required()
      ->check(CLI::IsMember({"b/cinv", "beta/qinv", "b/beta"}));
  add_order(renorm_cmd, &o.order);
  add_json(renorm_cmd);

  auto* qseries = app.add_subcommand("q-series", "q as a series in T over Q(beta)");
  add_order(qseries, &o.order);
  add_json(qseries);
  auto* qint = app.add_subcommand("q-integrality", "integrality of the coefficients of q and beta*q");
  add_order(qint, &o.order);
  add_json(qint);

  auto* pf = app.add_subcommand("partial_fractions", "partial fractions in (1 - q)^-1");
  pf->add_option("expr", expr, "expression")->required();
  add_json(pf);
  auto* quot = app.add_subcommand("quotient", "image in Z[beta_*]");
  quot->add_option("expr", expr, "expression")->required();
  add_json(quot);
  auto* adams = app.add_subcommand("adams", "Adams operation psi^k");
  adams->add_option("k", adams_k, "degree")->required()->check(CLI::PositiveNumber);
  adams->add_option("expr", expr, "expression")->required();
  add_order(adams, &o.order);
  add_json(adams);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  auto emit_report = [&](const Report& r, std::ostream& os) {
    if (o.json) os << to_json(r).dump(2) << "\n";
    else detail::print_report_text(r, os);
    return r.pass() ? exit_pass : exit_failure;
  };
  auto evaluate = [&](const std::string& text, RingHint hint = RingHint::automatic) {
    return Evaluator(o.order, hint).evaluate(*parse(text));
  };

  try {
    if (eval->parsed()) {
      auto v = evaluate(expr, parse_ring_hint(o.ring));
      if (o.json) out << value_json(expr, v).dump(2) << "\n";
      else out << render(v) << "\n";
      return exit_pass;
    }
    if (verify->parsed() || report->parsed() || cartier->parsed() || prop2->parsed()) {
      std::string name = verify->parsed() || report->parsed() ? suite : cartier->parsed() ? "cartier" : "prop2";
      if (!is_suite(name)) {
        err << "usage error: unknown suite '" << name << "'\n";
        return exit_usage;
      }
      if (suite_order < 1) {
        err << "usage error: suites need --order >= 1\n";
        return exit_usage;
      }
      auto r = run_suite(name, SuiteOptions{suite_order, o.seed, o.defect, 200});
      if (report->parsed() && !o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) {
          err << "cannot write " << o.out_file << "\n";
          return exit_usage;
        }
        int code = emit_report(r, f);
        out << "suite " << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << ", report written to " << o.out_file
            << "\n";
        return code;
      }
      return emit_report(r, out);
    }
    if (expand->parsed()) {
      auto v = evaluate(expr);
      tate_k::TateKElem x;
      if (const auto* k = std::get_if<tate_k::TateKElem>(&v)) x = *k;
      else if (const auto* r = std::get_if<Rational>(&v); r && r->is_integer()) x = tate_k::TateKElem::constant(r->numerator());
      else throw EvalError(0, "expand needs an element of Z[q, q^-1, (1 - q)^-1], got a " + kind_name(v));
      auto s = expansions::expand(x, expansions::parse_puncture(o.at), o.order);
      if (o.json) out << to_json(s).dump(2) << "\n";
      else out << s.to_string() << "\n";
      return exit_pass;
    }
    if (renorm_cmd->parsed()) {
      auto r = which == "b/cinv" ? renorm::b_over_cinv(o.order)
               : which == "beta/qinv" ? renorm::beta_over_qinv(o.order)
                                      : renorm::b_over_beta(o.order);
      auto render_coeff = [](const MultiPoly& p) { return p.to_string(detail::renorm_power); };
      if (o.json) {
        auto j = series_json(r.series, render_coeff);
        j["ring"] = "Q[c^-1,q^-1]";
        j["ratio"] = which;
        j["checks"] = to_json(r.report)["checks"];
        out << j.dump(2) << "\n";
      } else {
        out << r.series.to_string(render_coeff, "T") << "\n";
      }
      return r.report.pass() ? exit_pass : exit_failure;
    }
    if (qseries->parsed()) {
      auto s = tate_k::q_series(o.order);
      auto rf = [](const RationalFunction& f) { return f.to_string(); };
      if (o.json) out << series_json(s, rf).dump(2) << "\n";
      else out << s.to_string(rf, "T") << "\n";
      return exit_pass;
    }
    if (qint->parsed()) {
      auto entries = tate_k::integrality_report(o.order);
      if (o.json) {
        Json a = Json::array();
        for (const auto& e : entries) {
          Json j{{"series", e.series}, {"k", e.k}, {"value", e.value}, {"polynomial", e.polynomial}};
          if (e.integer_coords) {
            j["integral"] = *e.integer_coords;
            Json c = Json::array();
            for (const auto& r : e.coords) c.push_back(r.to_string());
            j["binomialCoords"] = c;
          }
          a.push_back(j);
        }
        out << a.dump(2) << "\n";
      } else {
        for (const auto& e : entries) out << tate_k::describe(e) << "\n";
      }
      return exit_pass;
    }
    if (pf->parsed() || quot->parsed()) {
      const std::string fn = pf->parsed() ? "partial_fractions" : "quotient";
      auto v = evaluate(fn + "(" + expr + ")");
      if (o.json) out << value_json(expr, v).dump(2) << "\n";
      else out << render(v) << "\n";
      return exit_pass;
    }
    if (adams->parsed()) {
      auto k = std::make_shared<Expr>(Expr{NumberNode{Integer(adams_k)}, 0});
      Expr call{ApplyNode{"adams", {k, parse(expr)}}, 0};
      auto v = Evaluator(o.order).evaluate(call);
      if (o.json) out << value_json(expr, v).dump(2) << "\n";
      else out << render(v) << "\n";
      return exit_pass;
    }
  } catch (const ParseError& e) {
    if (o.json) out << to_json(e).dump(2) << "\n";
    err << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    if (o.json) out << Json{{"error", Json{{"kind", "evaluation"}, {"message", e.what()}}}}.dump(2) << "\n";
    err << e.what() << "\n";
    return exit_usage;
  }
  err << "usage error: no subcommand\n";
  return exit_usage;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace tatecirc::cli
