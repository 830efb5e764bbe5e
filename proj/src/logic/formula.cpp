// Copyright 2026 The gbmodal Authors
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

#include "gbm/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "gbm/error.hpp"

namespace gbm::logic {

FormulaPtr Formula::bot() {
  static const FormulaPtr node = std::make_shared<const Formula>(Op::Bot, "", nullptr, nullptr);
  return node;
}

FormulaPtr Formula::top() {
  static const FormulaPtr node = std::make_shared<const Formula>(Op::Top, "", nullptr, nullptr);
  return node;
}

FormulaPtr Formula::prop(std::string name) {
  if (!valid_prop_name(name) || name == "bot" || name == "top")
    throw Error("invalid proposition name '" + name + "'");
  return std::make_shared<const Formula>(Op::Prop, std::move(name), nullptr, nullptr);
}

FormulaPtr Formula::binary(Op op, FormulaPtr l, FormulaPtr r) {
  if (op != Op::And && op != Op::Or) throw Error("not a binary connective");
  if (!l || !r) throw Error("null operand");
  return std::make_shared<const Formula>(op, "", std::move(l), std::move(r));
}

FormulaPtr Formula::unary(Op op, FormulaPtr f) {
  if (op < Op::Box) throw Error("not a modal operator");
  if (!f) throw Error("null operand");
  return std::make_shared<const Formula>(op, "", std::move(f), nullptr);
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) { return binary(Op::And, std::move(l), std::move(r)); }
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) { return binary(Op::Or, std::move(l), std::move(r)); }
FormulaPtr Formula::box(FormulaPtr f) { return unary(Op::Box, std::move(f)); }
FormulaPtr Formula::dia(FormulaPtr f) { return unary(Op::Dia, std::move(f)); }
FormulaPtr Formula::blackbox(FormulaPtr f) { return unary(Op::BlackBox, std::move(f)); }
FormulaPtr Formula::blackdia(FormulaPtr f) { return unary(Op::BlackDia, std::move(f)); }

bool equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Bot:
    case Op::Top:
      return true;
    case Op::Prop:
      return a.name() == b.name();
    case Op::And:
    case Op::Or:
      return equal(*a.left(), *b.left()) && equal(*a.right(), *b.right());
    default:
      return equal(*a.child(), *b.child());
  }
}

bool valid_prop_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

enum class Tok { Bot, Top, Ident, And, Or, Turnstile, Box, Dia, BlackBox, BlackDia, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (starts("|-")) {
      out.push_back({Tok::Turnstile, "|-", col});
      i += 2;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", col});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", col});
      ++i;
    } else if (starts("[]")) {
      out.push_back({Tok::Box, "[]", col});
      i += 2;
    } else if (starts("<>")) {
      out.push_back({Tok::Dia, "<>", col});
      i += 2;
    } else if (starts("[b]")) {
      out.push_back({Tok::BlackBox, "[b]", col});
      i += 3;
    } else if (starts("<b>")) {
      out.push_back({Tok::BlackDia, "<b>", col});
      i += 3;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string_view word = s.substr(i, j - i);
      if (word == "0") out.push_back({Tok::Bot, "0", col});
      else if (word == "1") out.push_back({Tok::Top, "1", col});
      else throw ParseError("unexpected '" + std::string(word) + "'", 0, col);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      if (word == "bot") out.push_back({Tok::Bot, word, col});
      else if (word == "top") out.push_back({Tok::Top, word, col});
      else out.push_back({Tok::Ident, word, col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 0, col);
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  const Token& peek() const { return toks_[pos_]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, 0, t.column);
  }

 private:
  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (peek().kind) {
      case Tok::Box: ++pos_; return Formula::box(parse_unary());
      case Tok::Dia: ++pos_; return Formula::dia(parse_unary());
      case Tok::BlackBox: ++pos_; return Formula::blackbox(parse_unary());
      case Tok::BlackDia: ++pos_; return Formula::blackdia(parse_unary());
      default: return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bot: ++pos_; return Formula::bot();
      case Tok::Top: ++pos_; return Formula::top();
      case Tok::Ident: ++pos_; return Formula::prop(t.text);
      case Tok::LParen: {
        ++pos_;
        FormulaPtr f = parse_or();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    default: return 3;
  }
}

void print_into(const Formula& f, std::string& out);

void print_operand(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f.op()) < min_prec) {
    out += '(';
    print_into(f, out);
    out += ')';
  } else {
    print_into(f, out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Bot: out += "bot"; return;
    case Op::Top: out += "top"; return;
    case Op::Prop: out += f.name(); return;
    case Op::And:
    case Op::Or: {
      const int p = precedence(f.op());
      print_operand(*f.left(), p, out);
      out += f.op() == Op::And ? " & " : " | ";
      print_operand(*f.right(), p + 1, out);
      return;
    }
    case Op::Box: out += "[]"; break;
    case Op::Dia: out += "<>"; break;
    case Op::BlackBox: out += "[b]"; break;
    case Op::BlackDia: out += "<b>"; break;
  }
  print_operand(*f.child(), 3, out);
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Prop) out.insert(f.name());
  if (f.left()) collect(*f.left(), out);
  if (f.right()) collect(*f.right(), out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser p(lex(text));
  FormulaPtr f = p.parse_or();
  if (p.peek().kind != Tok::End) p.fail("expected end of formula");
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(lex(text));
  FormulaPtr lhs = p.parse_or();
  p.expect(Tok::Turnstile, "'|-'");
  FormulaPtr rhs = p.parse_or();
  if (p.peek().kind != Tok::End) p.fail("expected end of sequent");
  return {std::move(lhs), std::move(rhs)};
}

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string print(const Sequent& s) { return print(*s.lhs) + " |- " + print(*s.rhs); }

std::set<std::string> props_of(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::set<std::string> props_of(const Sequent& s) {
  auto out = props_of(*s.lhs);
  auto rhs = props_of(*s.rhs);
  out.insert(rhs.begin(), rhs.end());
  return out;
}

std::size_t modal_depth(const Formula& f) {
  if (f.is_unary()) return 1 + modal_depth(*f.child());
  if (f.is_binary()) return std::max(modal_depth(*f.left()), modal_depth(*f.right()));
  return 0;
}

std::size_t modal_depth(const Sequent& s) { return std::max(modal_depth(*s.lhs), modal_depth(*s.rhs)); }

}  // namespace gbm::logic
