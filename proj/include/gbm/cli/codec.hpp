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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbm/algebra/lattice.hpp"
#include "gbm/frames/frame.hpp"

namespace gbm::cli {

/// Line-oriented frame file:
///
///   # comment
///   states: a b c          (or a numeric range: states: 370..780)
///   E: a>b b>c
///   Rbox: ...
///   Rdia: ...
///   val p: a c 520..560
///
/// Sections may repeat; their contents accumulate.
struct FrameDocument {
  UniversePtr universe;
  Rel E;
  std::optional<Rel> Rbox;  // defaults to E
  std::optional<Rel> Rdia;  // defaults to the converse of E
  std::map<std::string, StateSet> valuations;
};

/// Throws ParseError with a line and column. With `reflexive_closure` the
/// diagonal is added to E.
FrameDocument parse_frame(std::string_view text, bool reflexive_closure = false);
frames::GraphFrame to_frame(const FrameDocument& doc, frames::Check check = frames::Check::Enforce);

/// Canonical text: every relation written out in full, valuations as
/// interval runs on numeric universes. `header` lines are emitted as comments.
std::string save_frame(const frames::GraphFrame& frame, const std::map<std::string, StateSet>& valuations = {},
                       const std::vector<std::string>& header = {});

/// Algebra file:
///
///   elements: bot a b top
///   leq: bot<=a a<=top bot<=b b<=top
///   box: a->top
///   dia: a->a
///
/// `leq` is closed reflexively and transitively. Elements missing from
/// `box:` or `dia:` are fixed points.
algebra::ModalAlgebra parse_algebra(std::string_view text);
std::string save_algebra(const algebra::ModalAlgebra& a);

/// "{a, b}" or interval runs, as in to_string, for CLI output.
std::string format_set(const StateSet& s);

}  // namespace gbm::cli
