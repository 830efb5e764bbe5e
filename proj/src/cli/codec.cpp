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

#include "gbm/cli/codec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "gbm/error.hpp"

namespace gbm::cli {

namespace {

struct Word {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view key;
  std::size_t key_column;
  std::vector<Word> words;
};

std::vector<Word> split_words(std::string_view s, std::size_t offset) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back({s.substr(i, j - i), offset + i + 1});
    i = j;
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'section:'", number, first + 1);
      std::string_view key = line.substr(first, colon - first);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
      out.push_back({number, key, first + 1, split_words(line.substr(colon + 1), colon + 1)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// "lo..hi" with integer bounds.
std::optional<std::pair<long, long>> as_range(std::string_view w) {
  auto dots = w.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  auto lo = to_long(w.substr(0, dots));
  auto hi = to_long(w.substr(dots + 2));
  if (!lo || !hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

std::size_t state_index(const Universe& u, const Word& w, std::size_t line) {
  if (auto i = u.find(w.text)) return *i;
  throw ParseError("unknown state '" + std::string(w.text) + "'", line, w.column);
}

void add_edges(Rel& r, const Universe& u, const Line& line) {
  for (const Word& w : line.words) {
    auto gt = w.text.find('>');
    if (gt == std::string_view::npos || gt == 0 || gt + 1 == w.text.size())
      throw ParseError("expected an edge 'a>b'", line.number, w.column);
    Word a{w.text.substr(0, gt), w.column};
    Word b{w.text.substr(gt + 1), w.column + gt + 1};
    r.insert(state_index(u, a, line.number), state_index(u, b, line.number));
  }
}

void add_members(StateSet& s, const Universe& u, const Line& line) {
  for (const Word& w : line.words) {
    if (auto range = as_range(w.text)) {
      if (range->first > range->second) throw ParseError("empty range", line.number, w.column);
      for (long v = range->first; v <= range->second; ++v) {
        auto i = u.find(std::to_string(v));
        if (!i) throw ParseError("range reaches unknown state " + std::to_string(v), line.number, w.column);
        s.insert(*i);
      }
    } else {
      s.insert(state_index(u, w, line.number));
    }
  }
}

std::string edges_block(const std::string& key, const Rel& r) {
  std::ostringstream os;
  auto pairs = r.pairs();
  const auto& u = *r.source();
  if (pairs.empty()) return key + ":\n";
  constexpr std::size_t kPerLine = 12;
  for (std::size_t i = 0; i < pairs.size(); i += kPerLine) {
    os << key << ":";
    for (std::size_t k = i; k < std::min(pairs.size(), i + kPerLine); ++k)
      os << ' ' << u.label(pairs[k].first) << '>' << u.label(pairs[k].second);
    os << '\n';
  }
  return os.str();
}

std::string members_text(const StateSet& s) {
  const auto& u = *s.universe();
  std::string out;
  auto emit = [&](const std::string& w) {
    if (!out.empty()) out += ' ';
    out += w;
  };
  if (u.is_contiguous_range()) {
    const auto& vals = *u.numeric();
    auto idx = s.indices();
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && idx[j + 1] == idx[j] + 1) ++j;
      if (j == i) emit(std::to_string(vals[idx[i]]));
      else emit(std::to_string(vals[idx[i]]) + ".." + std::to_string(vals[idx[j]]));
      i = j + 1;
    }
  } else {
    for (const auto& l : s.labels()) emit(l);
  }
  return out;
}

}  // namespace

FrameDocument parse_frame(std::string_view text, bool reflexive_closure) {
  auto lines = split_lines(text);
  UniversePtr u;
  std::optional<Rel> e, rbox, rdia;
  std::map<std::string, StateSet> vals;
  for (const Line& line : lines) {
    if (line.key == "states") {
      if (u) throw ParseError("states declared twice", line.number, line.key_column);
      std::vector<std::string> labels;
      for (const Word& w : line.words) {
        if (auto range = as_range(w.text)) {
          if (range->first > range->second) throw ParseError("empty range", line.number, w.column);
          for (long v = range->first; v <= range->second; ++v) labels.push_back(std::to_string(v));
        } else {
          if (w.text.find('>') != std::string_view::npos)
            throw ParseError("state labels cannot contain '>'", line.number, w.column);
          labels.emplace_back(w.text);
        }
      }
      if (labels.empty()) throw ParseError("no states declared", line.number, line.key_column);
      try {
        u = Universe::make(std::move(labels));
      } catch (const InvalidStructure& ex) {
        throw ParseError(ex.what(), line.number, line.key_column);
      }
      continue;
    }
    if (!u) throw ParseError("'states:' must come first", line.number, line.key_column);
    auto relation = [&](std::optional<Rel>& slot) {
      if (!slot) slot.emplace(u, u);
      add_edges(*slot, *u, line);
    };
    if (line.key == "E") {
      relation(e);
    } else if (line.key == "Rbox") {
      relation(rbox);
    } else if (line.key == "Rdia") {
      relation(rdia);
    } else if (line.key.substr(0, 4) == "val " || line.key.substr(0, 4) == "val\t") {
      std::string name(line.key.substr(4));
      name.erase(0, name.find_first_not_of(" \t"));
      if (!logic::valid_prop_name(name))
        throw ParseError("invalid proposition name '" + name + "'", line.number, line.key_column + 4);
      auto it = vals.try_emplace(name, StateSet(u)).first;
      add_members(it->second, *u, line);
    } else {
      throw ParseError("unknown section '" + std::string(line.key) + "'", line.number, line.key_column);
    }
  }
  if (!u) throw ParseError("missing 'states:' line", 0, 1);
  if (!e) e.emplace(u, u);
  if (reflexive_closure) *e = *e | Rel::identity(u);
  return FrameDocument{u, std::move(*e), std::move(rbox), std::move(rdia), std::move(vals)};
}

frames::GraphFrame to_frame(const FrameDocument& doc, frames::Check check) {
  Rel rbox = doc.Rbox ? *doc.Rbox : doc.E;
  Rel rdia = doc.Rdia ? *doc.Rdia : converse(doc.E);
  return frames::GraphFrame::make(doc.E, std::move(rbox), std::move(rdia), check);
}

std::string save_frame(const frames::GraphFrame& frame, const std::map<std::string, StateSet>& valuations,
                       const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  const auto& u = *frame.universe();
  os << "states:";
  if (u.is_contiguous_range() && u.size() > 1) {
    os << ' ' << u.label(0) << ".." << u.label(u.size() - 1);
  } else {
    for (const auto& l : u.labels()) os << ' ' << l;
  }
  os << '\n';
  os << edges_block("E", frame.E()) << edges_block("Rbox", frame.Rbox()) << edges_block("Rdia", frame.Rdia());
  for (const auto& [name, s] : valuations) {
    std::string m = members_text(s);
    os << "val " << name << ":" << (m.empty() ? "" : " " + m) << '\n';
  }
  return os.str();
}

algebra::ModalAlgebra parse_algebra(std::string_view text) {
  auto lines = split_lines(text);
  UniversePtr u;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::map<std::size_t, std::size_t> box, dia;
  auto split_pair = [](const Word& w, std::string_view sep, std::size_t line) {
    auto at = w.text.find(sep);
    if (at == std::string_view::npos || at == 0 || at + sep.size() == w.text.size())
      throw ParseError("expected 'a" + std::string(sep) + "b'", line, w.column);
    return std::pair{Word{w.text.substr(0, at), w.column}, Word{w.text.substr(at + sep.size()), w.column + at + sep.size()}};
  };
  for (const Line& line : lines) {
    if (line.key == "elements") {
      if (u) throw ParseError("elements declared twice", line.number, line.key_column);
      std::vector<std::string> labels;
      for (const Word& w : line.words) labels.emplace_back(w.text);
      if (labels.empty()) throw ParseError("no elements declared", line.number, line.key_column);
      try {
        u = Universe::make(std::move(labels));
      } catch (const InvalidStructure& ex) {
        throw ParseError(ex.what(), line.number, line.key_column);
      }
      continue;
    }
    if (!u) throw ParseError("'elements:' must come first", line.number, line.key_column);
    if (line.key == "leq") {
      for (const Word& w : line.words) {
        auto [a, b] = split_pair(w, "<=", line.number);
        order.emplace_back(state_index(*u, a, line.number), state_index(*u, b, line.number));
      }
    } else if (line.key == "box" || line.key == "dia") {
      auto& table = line.key == "box" ? box : dia;
      for (const Word& w : line.words) {
        auto [a, b] = split_pair(w, "->", line.number);
        std::size_t from = state_index(*u, a, line.number);
        if (table.count(from)) throw ParseError("element mapped twice", line.number, w.column);
        table[from] = state_index(*u, b, line.number);
      }
    } else {
      throw ParseError("unknown section '" + std::string(line.key) + "'", line.number, line.key_column);
    }
  }
  if (!u) throw ParseError("missing 'elements:' line", 0, 1);
  auto lattice = algebra::FiniteLattice::generated_by(u, order);
  algebra::Table bt(u->size()), dt(u->size());
  for (std::size_t a = 0; a < u->size(); ++a) {
    bt[a] = box.count(a) ? box[a] : a;
    dt[a] = dia.count(a) ? dia[a] : a;
  }
  return algebra::ModalAlgebra::make(std::move(lattice), std::move(bt), std::move(dt));
}

std::string save_algebra(const algebra::ModalAlgebra& a) {
  std::ostringstream os;
  const auto& l = a.lattice();
  os << "elements:";
  for (const auto& label : l.carrier()->labels()) os << ' ' << label;
  os << "\nleq:";
  // Covering pairs only.
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (x == y || !l.leq(x, y)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < l.size() && cover; ++m)
        if (m != x && m != y && l.leq(x, m) && l.leq(m, y)) cover = false;
      if (cover) os << ' ' << l.label(x) << "<=" << l.label(y);
    }
  }
  os << "\nbox:";
  for (std::size_t x = 0; x < l.size(); ++x)
    if (a.box(x) != x) os << ' ' << l.label(x) << "->" << l.label(a.box(x));
  os << "\ndia:";
  for (std::size_t x = 0; x < l.size(); ++x)
    if (a.dia(x) != x) os << ' ' << l.label(x) << "->" << l.label(a.dia(x));
  os << '\n';
  return os.str();
}

std::string format_set(const StateSet& s) { return to_string(s); }

}  // namespace gbm::cli
