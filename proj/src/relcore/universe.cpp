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

#include "gbm/relcore/universe.hpp"

#include <charconv>

#include "gbm/error.hpp"

namespace gbm {
namespace {

std::optional<long> parse_long(const std::string& s) {
  long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  // Reject non-canonical spellings such as "007" so labels round-trip.
  if (std::to_string(v) != s) return std::nullopt;
  return v;
}

}  // namespace

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidStructure("universe must contain at least one state");
  index_.reserve(labels_.size());
  std::vector<long> values;
  values.reserve(labels_.size());
  bool numeric = true;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidStructure("empty state label");
    if (!index_.emplace(labels_[i], i).second)
      throw InvalidStructure("duplicate state label '" + labels_[i] + "'");
    if (numeric) {
      if (auto v = parse_long(labels_[i])) values.push_back(*v);
      else numeric = false;
    }
  }
  if (numeric) numeric_ = std::move(values);
}

UniversePtr Universe::make(std::vector<std::string> labels) {
  return UniversePtr(new Universe(std::move(labels)));
}

UniversePtr Universe::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

UniversePtr Universe::range(long lo, long hi) {
  if (hi < lo) throw InvalidStructure("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long v = lo; v <= hi; ++v) labels.push_back(std::to_string(v));
  return make(std::move(labels));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error("unknown state '" + std::string(label) + "'");
}

bool Universe::is_contiguous_range() const noexcept {
  if (!numeric_) return false;
  const auto& v = *numeric_;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != v[0] + static_cast<long>(i)) return false;
  return true;
}

void require_same(const UniversePtr& a, const UniversePtr& b, std::string_view what) {
  if (!same_universe(a, b))
    throw UniverseMismatch(std::string(what) + ": operands range over different universes");
}

}  // namespace gbm
