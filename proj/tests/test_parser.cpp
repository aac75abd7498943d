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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tatecirc/cli/evaluator.hpp"
#include "tatecirc/cli/parser.hpp"

namespace tatecirc::cli {
namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ParseError(ParseErrorKind::lexical, 0, "none");
}

TEST(Parser, ApplyTree) {
  auto e = parse("geom(cinv)");
  const auto* app = std::get_if<ApplyNode>(&e->node);
  ASSERT_NE(app, nullptr);
  EXPECT_EQ(app->function, "geom");
  ASSERT_EQ(app->args.size(), 1u);
  EXPECT_EQ(std::get<SymbolNode>(app->args[0]->node).name, "cinv");
}

TEST(Parser, PrecedenceAndAssociativity) {
  EXPECT_EQ(render(*parse("1-q-q^2")), "1 - q - q^2");
  EXPECT_EQ(render(*parse("1-(q-q^2)")), "1 - (q - q^2)");
}

TEST(Parser, Whitespace) { EXPECT_EQ(*parse(" ( 1 -q ) ^ -1*( 1-q)"), *parse("(1-q)^-1 * (1-q)")); }

TEST(Parser, ErrorKinds) {
  auto e = parse_error("exp(");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntax);
  EXPECT_EQ(e.offset(), 4u);
  EXPECT_FALSE(e.expected().empty());

  e = parse_error("q $ 2");
  EXPECT_EQ(e.kind(), ParseErrorKind::lexical);
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error("1 + zeta");
  EXPECT_EQ(e.kind(), ParseErrorKind::unknown_symbol);
  EXPECT_EQ(e.offset(), 4u);

  e = parse_error("sin(T)");
  EXPECT_EQ(e.kind(), ParseErrorKind::unknown_function);
  EXPECT_EQ(e.offset(), 0u);

  e = parse_error("  adams(2)");
  EXPECT_EQ(e.kind(), ParseErrorKind::arity);
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error("q^beta");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntax);
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error("(1 + q");
  EXPECT_EQ(e.offset(), 6u);
  e = parse_error("1 q");
  EXPECT_EQ(e.offset(), 2u);
  e = parse_error("");
  EXPECT_EQ(e.offset(), 0u);
}

TEST(Parser, IndexedSymbols) {
  EXPECT_NO_THROW(parse("b_12 + beta_0"));
  EXPECT_EQ(parse_error("b_").kind(), ParseErrorKind::unknown_symbol);
  EXPECT_EQ(parse_error("beta_x").kind(), ParseErrorKind::unknown_symbol);
}

const std::vector<std::string> kCorpus{
    "geom(cinv)",
    "(1-q)^-1 * (1-q)",
    "boundary(cinv^2)",
    "adams(2, q + q^-1)",
    "exp(b*T) - 1/(1 - cinv*T)",
    "-q^2 + --q - (-q)^3",
    "1 - (2 - (3 - 4))",
    "q / (c / T)",
    "12/4/3",
    "expand(qinv, inf)",
    "partial_fractions(q^2 * s^2)",
    "binom(beta, 3) * beta_2 + b_1^4",
    "log(1 + T)^-2",
    "bernoulli()",
    "((((q))))",
    "2 * -q",
};

TEST(Parser, RoundTripCorpus) {
  for (const auto& t : kCorpus) {
    auto e = parse(t);
    auto r = render(*e);
    EXPECT_EQ(*parse(r), *e) << t << " -> " << r;
    EXPECT_EQ(render(*parse(r)), r) << t;
  }
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> syms{"c", "cinv", "q", "qinv", "T", "b", "beta_2", "s", "u"};
  static const std::vector<std::string> fns{"exp", "log", "geom", "boundary", "adams", "binom"};
  auto e = std::make_shared<Expr>();
  int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
  switch (pick) {
    case 0: e->node = NumberNode{Integer(static_cast<long>(rng() % 20))}; break;
    case 1: e->node = SymbolNode{syms[rng() % syms.size()]}; break;
    case 2: e->node = NegNode{random_expr(rng, depth - 1)}; break;
    case 3: e->node = BinaryNode{"+-*/"[rng() % 4], random_expr(rng, depth - 1), random_expr(rng, depth - 1)}; break;
    case 4: e->node = PowerNode{random_expr(rng, depth - 1), static_cast<long>(rng() % 7) - 3}; break;
    default: {
      const auto& f = fns[rng() % fns.size()];
      std::vector<ExprPtr> args{random_expr(rng, depth - 1)};
      if (f == "adams" || f == "binom") args.push_back(random_expr(rng, depth - 1));
      e->node = ApplyNode{f, args};
    }
  }
  return e;
}

TEST(Parser, RoundTripRandomTrees) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto e = random_expr(rng, 5);
    auto text = render(*e);
    EXPECT_EQ(*parse(text), *e) << text;
  }
}

std::string ev(const std::string& t, long order = 8, RingHint h = RingHint::automatic) {
  return eval_to_string(t, order, h);
}

TEST(Evaluator, DocumentedExamples) {
  EXPECT_EQ(ev("boundary(cinv^2)"), "b_1");
  EXPECT_EQ(ev("geom(cinv)", 3), "1 + c^-1 T + c^-2 T^2 + c^-3 T^3");
  EXPECT_EQ(ev("adams(2, q + q^-1)"), "q^-2 + q^2");
  EXPECT_EQ(ev("(1-q)^-1 * (1-q)"), "1");
}

TEST(Evaluator, Arithmetic) {
  EXPECT_EQ(ev("1/2 + 1/3"), "5/6");
  EXPECT_EQ(ev("2^-3"), "1/8");
  EXPECT_EQ(ev("c*cinv + 2/3*cinv"), "2/3*c^-1 + 1");
  EXPECT_EQ(ev("(c + 1)^2 - c^2"), "1 + 2*c");
  EXPECT_EQ(ev("s*u"), "1");
  EXPECT_EQ(ev("q*s - s"), "-1");
  EXPECT_EQ(ev("b_2*b_3"), "10*b_5");
  EXPECT_EQ(ev("b^3"), "6*b_3");
  EXPECT_EQ(ev("beta*beta"), "binom(beta,1) + 2*binom(beta,2)");
  EXPECT_EQ(ev("binom(beta, 2)"), "binom(beta,2)");
  EXPECT_EQ(ev("binom(-1/2, 2)"), "3/8");
  EXPECT_EQ(ev("-q^2"), "-q^2");
}

TEST(Evaluator, Series) {
  EXPECT_EQ(ev("exp(b*T)", 3), "1 + b T + 1/2*b^2 T^2 + 1/6*b^3 T^3");
  EXPECT_EQ(ev("1/(1 - cinv*T)", 3), ev("geom(cinv)", 3));
  EXPECT_EQ(ev("exp(log(1 + T))", 6), "1 + T");
  EXPECT_EQ(ev("exp(b*T) * (1 - T)", 2), "1 + (-1 + b) T + (-b + 1/2*b^2) T^2");
  EXPECT_EQ(ev("(1 + qinv) * T", 2), "(1 + q^-1) T");
  EXPECT_THROW(ev("(q + qinv) * T", 2), EvalError);
  EXPECT_EQ(ev("1/T", 3), "T^-1");
  EXPECT_EQ(ev("bernoulli()", 4), "1 - 1/2 D + 1/12 D^2 - 1/720 D^4");
  EXPECT_EQ(ev("bernoulli(12)"), "-691/2730");
  EXPECT_EQ(ev("exp_bT()", 2), "1 + b_1 T + b_2 T^2");
  EXPECT_EQ(ev("binomial_series()", 2), "1 + binom(beta,1) T + binom(beta,2) T^2");
}

TEST(Evaluator, KTheoryAndExpansions) {
  EXPECT_EQ(ev("partial_fractions(q^2*s^2)"), "1 - 2*(1 - q)^-1 + (1 - q)^-2");
  EXPECT_EQ(ev("quotient(s^3 + q)"), "binom(beta,2)");
  EXPECT_EQ(ev("expand(s, 0)", 3), "1 + q + q^2 + q^3");
  EXPECT_EQ(ev("expand(qinv, 1)", 3), "1 + u + u^2 + u^3");
  EXPECT_EQ(ev("expand(qinv, inf)", 3), "-s - s^2 - s^3");
  EXPECT_EQ(ev("adams(3, expand(s, 0))", 6), "1 + q^3 + q^6");
  EXPECT_EQ(ev("pi_minus(c + 2*cinv^3)"), "2*c^-3");
}

TEST(Evaluator, Errors) {
  EXPECT_THROW(ev("exp(2)"), EvalError);
  EXPECT_THROW(ev("q/(1 + q)"), EvalError);
  EXPECT_THROW(ev("c + q"), EvalError);
  EXPECT_THROW(ev("(c + cinv)*T"), EvalError);
  EXPECT_THROW(ev("1/0"), EvalError);
  EXPECT_THROW(ev("s*T"), EvalError);
  EXPECT_THROW(ev("exp(T)", 4, RingHint::integers), EvalError);
  EXPECT_THROW(ev("q", 4, RingHint::tate_h), EvalError);
  EXPECT_THROW(ev("boundary(1/2*cinv)"), EvalError);
  EXPECT_THROW(ev("adams(0, q)"), EvalError);
  EXPECT_THROW(ev("adams(2, s)"), EvalError);
  EXPECT_THROW(ev("expand(q, 2)"), EvalError);
  EXPECT_THROW(ev("inf + 1"), EvalError);
  EXPECT_EQ(ev("geom(2)", 3, RingHint::integers), "1 + 2 T + 4 T^2 + 8 T^3");
  EXPECT_EQ(ev("cinv^2", 3, RingHint::tate_h), "c^-2");
}

}  // namespace
}  // namespace tatecirc::cli
