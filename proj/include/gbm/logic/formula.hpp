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

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace gbm::logic {

enum class Op { Bot, Top, Prop, And, Or, Box, Dia, BlackBox, BlackDia };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Children are shared, so copies are cheap.
class Formula {
 public:
  static FormulaPtr bot();
  static FormulaPtr top();
  static FormulaPtr prop(std::string name);  // throws Error on a bad name
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr box(FormulaPtr f);
  static FormulaPtr dia(FormulaPtr f);
  static FormulaPtr blackbox(FormulaPtr f);
  static FormulaPtr blackdia(FormulaPtr f);
  static FormulaPtr unary(Op op, FormulaPtr f);
  static FormulaPtr binary(Op op, FormulaPtr l, FormulaPtr r);

  Op op() const noexcept { return op_; }
  const std::string& name() const noexcept { return name_; }
  const FormulaPtr& left() const noexcept { return left_; }
  const FormulaPtr& right() const noexcept { return right_; }
  /// Operand of a modal node.
  const FormulaPtr& child() const noexcept { return left_; }

  bool is_unary() const noexcept { return op_ >= Op::Box; }
  bool is_binary() const noexcept { return op_ == Op::And || op_ == Op::Or; }

  Formula(Op op, std::string name, FormulaPtr l, FormulaPtr r)
      : op_(op), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

 private:
  Op op_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

/// Structural equality.
bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

bool valid_prop_name(std::string_view name);

struct Sequent {
  FormulaPtr lhs;
  FormulaPtr rhs;
};

inline bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

/// Precedence: modal prefixes bind tightest, then &, then |. Binary
/// connectives associate to the left. Throws ParseError with a column.
FormulaPtr parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

/// Canonical text with the fewest parentheses that parse back to the same tree.
std::string print(const Formula& f);
inline std::string print(const FormulaPtr& f) { return print(*f); }
std::string print(const Sequent& s);

std::set<std::string> props_of(const Formula& f);
inline std::set<std::string> props_of(const FormulaPtr& f) { return props_of(*f); }
std::set<std::string> props_of(const Sequent& s);
std::size_t modal_depth(const Formula& f);
inline std::size_t modal_depth(const FormulaPtr& f) { return modal_depth(*f); }
std::size_t modal_depth(const Sequent& s);

}  // namespace gbm::logic
