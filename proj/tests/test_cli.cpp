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

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "tatecirc/cli/app.hpp"

namespace tatecirc::cli {
namespace {

struct Result {
  int code;
  std::string out;
};

Result run_binary(const std::string& args) {
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

Result run_inline(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str()};
}

TEST(Cli, EvalExamples) {
  EXPECT_EQ(run_inline({"eval", "geom(cinv)", "--order", "3"}).out, "1 + c^-1 T + c^-2 T^2 + c^-3 T^3\n");
  EXPECT_EQ(run_inline({"eval", "boundary(cinv^2)"}).out, "b_1\n");
  EXPECT_EQ(run_inline({"adams", "2", "q + q^-1"}).out, "q^-2 + q^2\n");
  EXPECT_EQ(run_inline({"eval", "(1-q)^-1 * (1-q)"}).out, "1\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_inline({"verify", "prop1", "--order", "1", "--seed", "1"}).code, 0);
  EXPECT_EQ(run_inline({"verify", "prop1", "--order", "8", "--defect", "3"}).code, 1);
  EXPECT_EQ(run_inline({"verify", "prop2", "--order", "8", "--defect", "5"}).code, 1);
  EXPECT_EQ(run_inline({"eval", "exp("}).code, 2);
  EXPECT_EQ(run_inline({"eval", "c + q"}).code, 2);
  EXPECT_EQ(run_inline({"verify", "nope"}).code, 2);
  EXPECT_EQ(run_inline({"verify", "prop1", "--order", "0"}).code, 2);
  EXPECT_EQ(run_inline({"verify", "cartier", "--defect", "1"}).code, 2);
  EXPECT_EQ(run_inline({"frobnicate"}).code, 2);
  EXPECT_EQ(run_inline({}).code, 2);
  EXPECT_EQ(run_inline({"expand", "q", "--at", "2"}).code, 2);
  EXPECT_EQ(run_inline({"renorm", "c/b"}).code, 2);
}

TEST(Cli, DefectLocation) {
  auto r = run_inline({"verify", "prop1", "--order", "8", "--defect", "3", "--json"});
  auto j = Json::parse(r.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["status"] == "fail") {
      EXPECT_EQ(c["firstDefect"]["index"].get<long>(), 3);
      found = true;
      break;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, ReportSchema) {
  auto j = Json::parse(run_inline({"verify", "rota-baxter", "--order", "4", "--seed", "9", "--json"}).out);
  EXPECT_EQ(j["suite"], "rota-baxter");
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("identity"));
    EXPECT_EQ(c["status"], "pass");
    EXPECT_FALSE(c.contains("firstDefect"));
  }
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "order", "seed", "pass", "checks", "notes"}));
}

TEST(Cli, SeedsAreReproducible) {
  auto a = run_inline({"verify", "exactness-k", "--order", "4", "--seed", "3", "--json"}).out;
  auto b = run_inline({"verify", "exactness-k", "--order", "4", "--seed", "3", "--json"}).out;
  EXPECT_EQ(a, b);
}

TEST(Cli, ParseErrorJson) {
  auto r = run_inline({"eval", "exp(", "--json"});
  EXPECT_EQ(r.code, 2);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "syntax");
  EXPECT_EQ(j["error"]["offset"], 4);
}

TEST(Cli, ExpandJson) {
  auto j = Json::parse(run_inline({"expand", "qinv", "--at", "inf", "--order", "3", "--json"}).out);
  EXPECT_EQ(j["puncture"], "inf");
  EXPECT_EQ(j["variable"], "s");
  EXPECT_EQ(j["low"], 1);
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["coeffs"], (Json{"-1", "-1", "-1"}));
  EXPECT_EQ(run_inline({"expand", "s", "--at", "1", "--order", "2"}).out, "u^-1\n");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run_inline({"renorm", "b/cinv", "--order", "2"}).out, "1 + 1/2*c^-1 T + 1/3*c^-2 T^2\n");
  auto rj = Json::parse(run_inline({"renorm", "beta/qinv", "--order", "1", "--json"}).out);
  EXPECT_EQ(rj["coeffs"], (Json{"1", "1/2 + 1/2*q^-1"}));
  EXPECT_EQ(run_inline({"q-series", "--order", "1"}).out, "1/beta + ((1 + beta)/(2*beta)) T\n");
  EXPECT_NE(run_inline({"q-integrality", "--order", "1"}).out.find("[beta*q] T^1: 1/2 + 1/2*beta"), std::string::npos);
  EXPECT_EQ(run_inline({"partial_fractions", "q^2*s^2"}).out, "1 - 2*(1 - q)^-1 + (1 - q)^-2\n");
  EXPECT_EQ(run_inline({"quotient", "s^3"}).out, "binom(beta,2)\n");
  EXPECT_EQ(run_inline({"cartier", "--order", "3"}).code, 0);
  EXPECT_EQ(run_inline({"prop2", "--order", "6"}).code, 0);
  EXPECT_EQ(run_inline({"adams", "3", "expand(s, 0)", "--order", "6"}).out, "1 + q^3 + q^6\n");
}

TEST(Cli, ReportToFile) {
  std::string path = ::testing::TempDir() + "tatecirc_report.json";
  auto r = run_inline({"report", "divided-powers", "--order", "6", "--json", "--out", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  auto j = Json::parse(f);
  EXPECT_EQ(j["suite"], "divided-powers");
}

TEST(CliBinary, EndToEnd) {
  auto ok = run_binary("verify all --order 64 --seed 1 --json");
  EXPECT_EQ(ok.code, 0);
  auto again = run_binary("verify all --order 64 --seed 1 --json");
  EXPECT_EQ(ok.out, again.out);
  EXPECT_TRUE(Json::parse(ok.out)["pass"].get<bool>());
  EXPECT_EQ(run_binary("verify all --order 16 --seed 1 --defect 4").code, 1);
  EXPECT_EQ(run_binary("eval 'exp('").code, 2);
  EXPECT_EQ(run_binary("eval 'boundary(cinv^2)'").out, "b_1\n");
}

}  // namespace
}  // namespace tatecirc::cli
