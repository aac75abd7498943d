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

#include <cctype>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tatecirc/rational.hpp"

/// Expression language:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | base ('^' signed-int)?
///   base   := number | symbol | '(' expr ')' | ident '(' args ')'
namespace tatecirc::cli {

enum class ParseErrorKind { lexical, syntax, unknown_symbol, unknown_function, arity };

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::lexical: return "lexical";
    case ParseErrorKind::syntax: return "syntax";
    case ParseErrorKind::unknown_symbol: return "unknown-symbol";
    case ParseErrorKind::unknown_function: return "unknown-function";
    case ParseErrorKind::arity: return "arity";
  }
  return "?";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, std::string detail, std::vector<std::string> expected = {})
      : std::runtime_error(format(kind, offset, detail, expected)),
        kind_(kind),
        offset_(offset),
        detail_(std::move(detail)),
        expected_(std::move(expected)) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(ParseErrorKind kind, std::size_t offset, const std::string& detail,
                            const std::vector<std::string>& expected) {
    std::string s = std::string(to_string(kind)) + " error at offset " + std::to_string(offset) + ": " + detail;
    if (!expected.empty()) {
      s += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
      s += ")";
    }
    return s;
  }

  ParseErrorKind kind_;
  std::size_t offset_;
  std::string detail_;
  std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberNode {
  Integer value;
};
struct SymbolNode {
  std::string name;
};
struct NegNode {
  ExprPtr operand;
};
struct BinaryNode {
  char op;  // + - * /
  ExprPtr lhs, rhs;
};
struct PowerNode {
  ExprPtr base;
  long exponent;
};
struct ApplyNode {
  std::string function;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<NumberNode, SymbolNode, NegNode, BinaryNode, PowerNode, ApplyNode> node;
  std::size_t offset = 0;
};

inline bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b) { return a && b ? *a == *b : a == b; }

inline bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using N = std::decay_t<decltype(x)>;
        const auto& y = std::get<N>(b.node);
        if constexpr (std::is_same_v<N, NumberNode>) return x.value == y.value;
        else if constexpr (std::is_same_v<N, SymbolNode>) return x.name == y.name;
        else if constexpr (std::is_same_v<N, NegNode>) return same(x.operand, y.operand);
        else if constexpr (std::is_same_v<N, BinaryNode>) return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        else if constexpr (std::is_same_v<N, PowerNode>) return x.exponent == y.exponent && same(x.base, y.base);
        else {
          if (x.function != y.function || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!same(x.args[i], y.args[i])) return false;
          return true;
        }
      },
      a.node);
}

struct FunctionInfo {
  std::string name;
  std::size_t min_args, max_args;
};

inline const std::vector<FunctionInfo>& functions() {
  static const std::vector<FunctionInfo> table{
      {"exp", 1, 1},        {"log", 1, 1},           {"geom", 1, 1},       {"binomial_series", 0, 0},
      {"bernoulli", 0, 1},  {"boundary", 1, 1},      {"pi_minus", 1, 1},   {"partial_fractions", 1, 1},
      {"quotient", 1, 1},   {"adams", 2, 2},         {"expand", 2, 2},     {"binom", 2, 2},
      {"exp_bT", 0, 0},     {"geom_cinv", 0, 0},
  };
  return table;
}

inline const FunctionInfo* find_function(const std::string& name) {
  for (const auto& f : functions())
    if (f.name == name) return &f;
  return nullptr;
}

inline bool is_symbol(const std::string& name) {
  static const std::vector<std::string> plain{"c", "cinv", "b", "q", "qinv", "beta", "T", "u", "s", "inf"};
  for (const auto& s : plain)
    if (s == name) return true;
  static const std::regex indexed("(b|beta)_[0-9]+");
  return std::regex_match(name, indexed);
}

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

inline std::string describe(Tok t) {
  switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    unsigned char ch = static_cast<unsigned char>(in[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Tok::number, in.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_')) ++i;
      out.push_back({Tok::ident, in.substr(start, i - start), start});
      continue;
    }
    Tok t;
    switch (ch) {
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '/': t = Tok::slash; break;
      case '^': t = Tok::caret; break;
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case ',': t = Tok::comma; break;
      default:
        throw ParseError(ParseErrorKind::lexical, start, "unexpected character '" + std::string(1, in[i]) + "'");
    }
    out.push_back({t, std::string(1, in[i]), start});
    ++i;
  }
  out.push_back({Tok::end, "", in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& in) : toks_(lex(in)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().kind != Tok::end) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseErrorKind::syntax, t.offset, "unexpected " + got, std::move(expected));
  }

  static ExprPtr make(std::size_t offset, auto node) {
    auto e = std::make_shared<Expr>();
    e->node = std::move(node);
    e->offset = offset;
    return e;
  }

  ExprPtr expr() {
    auto lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const auto& op = next();
      lhs = make(op.offset, BinaryNode{op.text[0], lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const auto& op = next();
      lhs = make(op.offset, BinaryNode{op.text[0], lhs, factor()});
    }
    return lhs;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::minus) {
      auto at = next().offset;
      return make(at, NegNode{factor()});
    }
    auto b = base();
    if (peek().kind == Tok::caret) {
      auto at = next().offset;
      bool negative = accept(Tok::minus);
      if (!negative) accept(Tok::plus);
      if (peek().kind != Tok::number) fail({"integer exponent"});
      const auto& num = next();
      long e;
      try {
        e = std::stol(num.text);
      } catch (const std::out_of_range&) {
        throw ParseError(ParseErrorKind::syntax, num.offset, "exponent " + num.text + " out of range");
      }
      return make(at, PowerNode{b, negative ? -e : e});
    }
    return b;
  }

  ExprPtr base() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        return make(t.offset, NumberNode{Integer(t.text)});
      }
      case Tok::lparen: {
        next();
        auto e = expr();
        if (!accept(Tok::rparen)) fail({"')'", "operator"});
        return e;
      }
      case Tok::ident: {
        next();
        if (peek().kind == Tok::lparen) return apply(t);
        if (!is_symbol(t.text))
          throw ParseError(ParseErrorKind::unknown_symbol, t.offset, "unknown symbol '" + t.text + "'");
        return make(t.offset, SymbolNode{t.text});
      }
      default:
        fail({"number", "symbol", "function", "'('", "'-'"});
    }
  }

  ExprPtr apply(const Token& name) {
    const auto* info = find_function(name.text);
    if (!info)
      throw ParseError(ParseErrorKind::unknown_function, name.offset, "unknown function '" + name.text + "'");
    next();  // '('
    std::vector<ExprPtr> args;
    if (!accept(Tok::rparen)) {
      args.push_back(expr());
      while (accept(Tok::comma)) args.push_back(expr());
      if (!accept(Tok::rparen)) fail({"','", "')'", "operator"});
    }
    if (args.size() < info->min_args || args.size() > info->max_args) {
      std::string want = info->min_args == info->max_args
                             ? std::to_string(info->min_args)
                             : std::to_string(info->min_args) + " to " + std::to_string(info->max_args);
      throw ParseError(ParseErrorKind::arity, name.offset,
                       name.text + " takes " + want + " argument(s), got " + std::to_string(args.size()));
    }
    return make(name.offset, ApplyNode{name.text, std::move(args)});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, BinaryNode>) return n.op == '+' || n.op == '-' ? 1 : 2;
        else if constexpr (std::is_same_v<N, NegNode>) return 3;
        else if constexpr (std::is_same_v<N, PowerNode>) return 4;
        else return 5;
      },
      e.node);
}

}  // namespace detail

inline ExprPtr parse(const std::string& input) { return detail::Parser(input).parse(); }

/// Canonical text; parse(render(e)) == e.
inline std::string render(const Expr& e) {
  using detail::precedence;
  auto wrap = [](const Expr& sub, bool paren) { return paren ? "(" + render(sub) + ")" : render(sub); };
  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NumberNode>) return n.value.get_str();
        else if constexpr (std::is_same_v<N, SymbolNode>) return n.name;
        else if constexpr (std::is_same_v<N, NegNode>) return "-" + wrap(*n.operand, precedence(*n.operand) < 3);
        else if constexpr (std::is_same_v<N, BinaryNode>) {
          int p = precedence(e);
          std::string op = n.op == '*' ? " * " : n.op == '/' ? " / " : std::string(" ") + n.op + " ";
          return wrap(*n.lhs, precedence(*n.lhs) < p) + op + wrap(*n.rhs, precedence(*n.rhs) <= p);
        } else if constexpr (std::is_same_v<N, PowerNode>)
          return wrap(*n.base, precedence(*n.base) < 5) + "^" + std::to_string(n.exponent);
        else {
          std::string s = n.function + "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) s += (i ? ", " : "") + render(*n.args[i]);
          return s + ")";
        }
      },
      e.node);
}

}  // namespace tatecirc::cli
