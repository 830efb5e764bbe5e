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

#include <string>
#include <string_view>
#include <vector>

#include "gbm/cli/codec.hpp"

namespace gbm::cli {

/// Three food words, E: chips > fries, chips > crisps (plus loops);
/// Rbox: fries <> chips, chips > crisps (plus loops); V(p) = {fries, crisps}.
/// The diamond relation is the converse of E.
FrameDocument synonymy_example();

/// A wavelength band with discrimination threshold `delta` and the agent's
/// coarser threshold `delta_a`.
struct Band {
  long lo;
  long hi;
  long delta;
  long delta_a;
};

std::vector<Band> default_colour_table();
/// "370-519:3:7,520-550:4:8,..."; throws ParseError.
std::vector<Band> parse_colour_table(std::string_view table);

/// States lo..hi of the table; x E y iff |x - y| < delta(x), and
/// x R y iff |x - y| < delta_a(x) for both modal relations. With
/// `agent_uses_delta` the agent's threshold equals delta. Valuations
/// green, yellow, orange.
FrameDocument colour_example(const std::vector<Band>& table, bool agent_uses_delta = false);

}  // namespace gbm::cli
