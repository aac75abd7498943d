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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "tatecirc/cli/app.hpp"
#include "tatecirc/expansions.hpp"
#include "tatecirc/renorm.hpp"
#include "tatecirc/tate_h.hpp"
#include "tatecirc/tate_k.hpp"

using namespace tatecirc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

std::string first_failure(const Report& r) {
  const auto* c = r.first_failure();
  if (!c) return "";
  std::string s = c->identity;
  if (c->first_defect)
    s += " at " + std::to_string(c->first_defect->index) + ": expected " + c->first_defect->expected + ", got " +
         c->first_defect->actual;
  return s;
}

bool has_check(const Report& r, const std::string& fragment) {
  for (const auto& c : r.checks)
    if (c.identity.find(fragment) != std::string::npos) return true;
  return false;
}

bool has_note(const Report& r, const std::string& fragment) {
  for (const auto& n : r.notes)
    if (n.find(fragment) != std::string::npos) return true;
  return false;
}

Outcome prop1() {
  for (long n : {1L, 8L}) {
    auto r = tate_h::verify_prop1(n);
    if (!r.pass()) return fail("order " + std::to_string(n) + ": " + first_failure(r));
  }
  auto t0 = Clock::now();
  auto r = tate_h::verify_prop1(64);
  double dt = seconds_since(t0);
  if (!r.pass()) return fail("order 64: " + first_failure(r));
  if (r.checks.size() < 2 || !has_check(r, "boundary termwise")) return fail("missing termwise boundary check");
  if (dt >= 1.0) return fail("order 64 took " + std::to_string(dt) + " s");
  return {true, "orders 1, 8, 64; " + std::to_string(dt) + " s at 64"};
}

Outcome corollary() {
  auto t0 = Clock::now();
  auto b = tate_h::b_series_from_c(32);
  if (!b.check.pass) return fail(b.check.identity);
  auto c = tate_h::c_series_from_b(32);
  if (!c.report.pass()) return fail(first_failure(c.report));
  if (!has_check(c.report, "log(1 - c^-1 T) = b")) return fail("round trip not checked");
  int sign = 0;
  for (long n = 4; n <= 32; ++n) {
    auto r = tate_h::c_series_from_b(n);
    if (r.matching_sign != 1 && r.matching_sign != -1) return fail("no unique sign at order " + std::to_string(n));
    if (sign != 0 && r.matching_sign != sign) return fail("sign changes at order " + std::to_string(n));
    sign = r.matching_sign;
    if (r.report.notes.empty()) return fail("sign not recorded at order " + std::to_string(n));
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("took " + std::to_string(dt) + " s");
  return {true, "matching sign " + std::string(sign > 0 ? "+1" : "-1") + " at orders 4..32"};
}

Outcome bernoulli() {
  // Independent oracle: B_0 = 1, sum_{k<m} binom(m+1, k) B_k = -(m+1) B_m.
  std::vector<Rational> oracle{Rational(1)};
  for (long m = 1; m <= 24; ++m) {
    Rational s(0);
    for (long k = 0; k < m; ++k) s = s + Rational(binomial(m + 1, k)) * oracle[static_cast<std::size_t>(k)];
    oracle.push_back(-s / Rational(m + 1));
  }
  auto series = bernoulli_minus(24);
  for (long n = 0; n <= 24; ++n) {
    Rational got = series[n] * Rational(factorial(static_cast<unsigned long>(n)));
    if (got != oracle[static_cast<std::size_t>(n)])
      return fail("n = " + std::to_string(n) + ": " + got.to_string() + " vs " + oracle[static_cast<std::size_t>(n)].to_string());
    if (n > 1 && n % 2 == 1 && !series[n].is_zero()) return fail("odd coefficient " + std::to_string(n) + " nonzero");
  }
  return {true, "n <= 24"};
}

Outcome divided_powers() {
  DividedPowerElem p = DividedPowerElem::one();
  for (unsigned k = 1; k <= 12; ++k) {
    p = p * DividedPowerElem::basis(1);
    if (p != DividedPowerElem::basis(k, factorial(k))) return fail("k = " + std::to_string(k) + ": " + p.to_string());
  }
  return {true, "k <= 12"};
}

Outcome rota_baxter() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> e(-8, 8);
  std::uniform_int_distribution<int> c(-5, 5), n(0, 6);
  auto random = [&] {
    LaurentPoly p("c");
    int t = n(rng);
    for (int i = 0; i < t; ++i) p.add_term(e(rng), c(rng));
    return tate_h::TateHElem(p);
  };
  for (int i = 0; i < 200; ++i) {
    auto x = random(), y = random();
    auto d = tate_h::rota_baxter_defect(x, y);
    if (!d.is_zero()) return fail("x = " + x.to_string() + ", y = " + y.to_string() + ": " + d.to_string());
  }
  return {true, "200 pairs, window [-8, 8]"};
}

Outcome exactness() {
  cli::SuiteOptions o{8, 1, std::nullopt, 200};
  auto h = cli::run_suite("exactness-h", o);
  if (!h.pass()) return fail(first_failure(h));
  auto k = cli::run_suite("exactness-k", o);
  if (!k.pass()) return fail(first_failure(k));
  // Partial fractions of explicit elements with integer pole coefficients.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p("q");
    for (int t = 0; t < 4; ++t) p.add_term(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 11) - 5);
    tate_k::TateKElem x(p, static_cast<unsigned>(rng() % 6));
    auto pf = tate_k::partial_fractions(x);
    if (pf.reconstruct() != x) return fail("reconstruction of " + x.to_string());
  }
  return {true, "200 random elements per sequence"};
}

Outcome cartier() {
  auto t0 = Clock::now();
  auto r = tate_k::cartier_check(12, 12);
  double dt = seconds_since(t0);
  if (!r.report.pass()) return fail(first_failure(r.report));
  if (dt >= 5.0) return fail("took " + std::to_string(dt) + " s");
  return {true, "bi-orders <= (12,12), " + std::to_string(dt) + " s"};
}

Outcome prop2() {
  auto r = tate_k::verify_prop2(64);
  if (!r.pass()) return fail(first_failure(r));
  return {true, "order 64"};
}

Outcome q_series() {
  auto q = tate_k::q_series(32);
  auto beta = RationalFunction::from_poly(MultiPoly::generator({"beta"}, 0));
  if (q.valuation() != 0 || q[0] != beta.inverse()) return fail("leading term " + q[q.valuation()].to_string());
  auto prod = q * tate_k::q_inverse_series_rf(32);
  if (prod.order() < 32) return fail("product order " + std::to_string(prod.order()));
  for (long k = 0; k <= 32; ++k)
    if (prod[k] != (k == 0 ? tate_k::beta_field().one : tate_k::beta_field().zero))
      return fail("q q^-1 at T^" + std::to_string(k) + ": " + prod[k].to_string());
  auto entries = tate_k::integrality_report(16);
  if (entries.size() != 34) return fail("integrality report has " + std::to_string(entries.size()) + " entries");
  for (const auto& e : entries)
    if (e.polynomial != e.integer_coords.has_value()) return fail("incomplete entry " + tate_k::describe(e));
  return {true, "1/beta leading, q q^-1 = 1 to 32, integrality report to 16"};
}

Outcome renormalization() {
  auto bb = renorm::b_over_beta(24);
  auto d = renorm::diagonal(bb.series);
  for (long k = 0; k <= 24; ++k) {
    Rational expected = Rational(k % 2 == 0 ? 1 : -1, k + 1);
    if (d[k] != renorm::constant(expected)) return fail("diagonal at T^" + std::to_string(k) + ": " + d[k].to_string());
  }
  auto r = renorm::verify_renorm(24);
  if (!r.pass()) return fail(first_failure(r));
  std::size_t contracts = 0;
  for (const auto& c : r.checks)
    if (c.identity.find(" * ") != std::string::npos || c.identity.find("] * [") != std::string::npos) ++contracts;
  if (contracts < 3) return fail("only " + std::to_string(contracts) + " multiply-back checks");
  return {true, "diagonal exact to 24, " + std::to_string(contracts) + " multiply-back checks"};
}

Outcome expansions_criterion() {
  auto r = expansions::verify_expansions(32, 1, 100);
  if (!r.pass()) return fail(first_failure(r));
  for (const char* at : {"0", "1", "inf"}) {
    std::string suffix = std::string(" at ") + at;
    if (!has_check(r, "phi(x y) = phi(x) phi(y)" + suffix) || !has_check(r, "phi(q) phi(q^-1) = 1" + suffix))
      return fail("missing checks" + suffix);
  }
  if (!has_note(r, "s-puncture sign finding")) return fail("sign finding missing");
  return {true, "100 pairs per puncture; sign finding recorded"};
}

Outcome adams() {
  auto r = expansions::verify_adams(32, 1, 5);
  if (!r.pass()) return fail(first_failure(r));
  return {true, "k, l <= 5"};
}

struct Proc {
  int code;
  std::string out;
};

Proc run_binary(const std::string& args) {
  std::string cmd = std::string(TATECIRC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_criterion() {
  auto t0 = Clock::now();
  auto a = run_binary("verify all --order 64 --seed 1 --json");
  double dt = seconds_since(t0);
  if (a.code != 0) return fail("verify all exited " + std::to_string(a.code));
  auto b = run_binary("verify all --order 64 --seed 1 --json");
  if (a.out != b.out) return fail("reports differ between runs");
  if (!cli::Json::parse(a.out)["pass"].get<bool>()) return fail("report pass flag false");
  auto f = run_binary("verify all --order 64 --seed 1 --defect 7");
  if (f.code != 1) return fail("fault injection exited " + std::to_string(f.code));
  auto m = run_binary("eval 'exp('");
  if (m.code != 2) return fail("malformed input exited " + std::to_string(m.code));
  if (dt >= 30.0) return fail("full suite took " + std::to_string(dt) + " s");
  return {true, "exit codes 0/1/2, deterministic, " + std::to_string(dt) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exp(bT) = (1 - c^-1 T)^-1", prop1},
      {"b = -T^-1 log(1 - c^-1 T) and the sign of c", corollary},
      {"Bernoulli operator coefficients", bernoulli},
      {"divided powers b_1^k = k! b_k", divided_powers},
      {"Rota-Baxter identity for pi_minus", rota_baxter},
      {"exactness of both sequences", exactness},
      {"Cartier relation", cartier},
      {"(1 - q^-1 T)^-1 = (1 + T)^beta", prop2},
      {"q-series and integrality report", q_series},
      {"renormalization ratios", renormalization},
      {"puncture expansions", expansions_criterion},
      {"Adams operations", adams},
      {"command line contract", cli_criterion},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ")\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << "\n";
  return failures ? 1 : 0;
}
