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

#include "gbm/cli/examples.hpp"

#include <charconv>
#include <cstdlib>

#include "gbm/error.hpp"

namespace gbm::cli {

FrameDocument synonymy_example() {
  UniversePtr u = Universe::make({"fries", "crisps", "chips"});
  enum { fries, crisps, chips };
  Rel e = Rel::from_pairs(u, {{fries, fries}, {crisps, crisps}, {chips, chips}, {chips, fries}, {chips, crisps}});
  Rel r = Rel::from_pairs(
      u, {{fries, fries}, {crisps, crisps}, {chips, chips}, {fries, chips}, {chips, fries}, {chips, crisps}});
  std::map<std::string, StateSet> vals{{"p", StateSet::of(u, {fries, crisps})}};
  Rel rdia = converse(e);
  return FrameDocument{u, std::move(e), std::move(r), std::move(rdia), std::move(vals)};
}

std::vector<Band> default_colour_table() {
  return {{370, 519, 3, 7}, {520, 550, 4, 8}, {551, 570, 3, 7}, {571, 780, 2, 6}};
}

std::vector<Band> parse_colour_table(std::string_view table) {
  std::vector<Band> out;
  std::size_t pos = 0;
  auto number = [&](std::string_view s, std::size_t col) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw ParseError("expected an integer in colour table", 0, col);
    return v;
  };
  while (pos <= table.size()) {
    std::size_t end = table.find(',', pos);
    if (end == std::string_view::npos) end = table.size();
    std::string_view item = table.substr(pos, end - pos);
    // lo-hi:delta:delta_a
    std::size_t dash = item.find('-');
    std::size_t c1 = item.find(':');
    std::size_t c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
    if (dash == std::string_view::npos || c1 == std::string_view::npos || c2 == std::string_view::npos ||
        dash > c1)
      throw ParseError("expected 'lo-hi:delta:delta_a'", 0, pos + 1);
    Band b{number(item.substr(0, dash), pos + 1), number(item.substr(dash + 1, c1 - dash - 1), pos + dash + 2),
           number(item.substr(c1 + 1, c2 - c1 - 1), pos + c1 + 2), number(item.substr(c2 + 1), pos + c2 + 2)};
    if (b.lo > b.hi || b.delta <= 0 || b.delta_a <= 0) throw ParseError("invalid band", 0, pos + 1);
    if (!out.empty() && b.lo != out.back().hi + 1) throw ParseError("bands must be contiguous", 0, pos + 1);
    out.push_back(b);
    if (end == table.size()) break;
    pos = end + 1;
  }
  return out;
}

FrameDocument colour_example(const std::vector<Band>& table, bool agent_uses_delta) {
  if (table.empty()) throw InvalidStructure("empty colour table");
  const long lo = table.front().lo, hi = table.back().hi;
  UniversePtr u = Universe::range(lo, hi);
  const std::size_t n = u->size();
  std::vector<long> delta(n), delta_a(n);
  for (const Band& b : table)
    for (long x = b.lo; x <= b.hi; ++x) {
      delta[x - lo] = b.delta;
      delta_a[x - lo] = agent_uses_delta ? b.delta : b.delta_a;
    }
  Rel e(u, u), r(u, u);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const long d = std::labs(static_cast<long>(x) - static_cast<long>(y));
      if (d < delta[x]) e.insert(x, y);
      if (d < delta_a[x]) r.insert(x, y);
    }
  }
  auto band = [&](long a, long b) {
    StateSet s(u);
    for (long v = std::max(a, lo); v <= std::min(b, hi); ++v) s.insert(static_cast<std::size_t>(v - lo));
    return s;
  };
  std::map<std::string, StateSet> vals{
      {"green", band(520, 560)}, {"yellow", band(560, 590)}, {"orange", band(590, 635)}};
  return FrameDocument{u, std::move(e), r, r, std::move(vals)};
}

}  // namespace gbm::cli
