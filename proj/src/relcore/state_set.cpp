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

#include "gbm/relcore/state_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gbm/error.hpp"
#include "gbm/relcore/kernels.hpp"

namespace gbm {

StateSet::StateSet(UniversePtr universe)
    : universe_(std::move(universe)), words_(words_for(universe_->size()), 0) {}

StateSet::StateSet(UniversePtr universe, std::vector<Word> words)
    : universe_(std::move(universe)), words_(std::move(words)) {
  if (words_.size() != words_for(universe_->size()))
    throw Error("StateSet: word count does not match universe");
  mask_tail();
}

void StateSet::mask_tail() {
  const std::size_t rem = universe_->size() % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

StateSet StateSet::full(UniversePtr universe) {
  std::vector<Word> w(words_for(universe->size()), ~Word{0});
  return StateSet(std::move(universe), std::move(w));
}

StateSet StateSet::of(UniversePtr universe, std::initializer_list<std::size_t> members) {
  return of(std::move(universe), std::span<const std::size_t>(members.begin(), members.size()));
}

StateSet StateSet::of(UniversePtr universe, std::span<const std::size_t> members) {
  StateSet s(std::move(universe));
  for (std::size_t m : members) {
    if (m >= s.universe_size()) throw Error("StateSet: index out of range");
    s.insert(m);
  }
  return s;
}

StateSet StateSet::from_labels(UniversePtr universe, const std::vector<std::string>& labels) {
  StateSet s(universe);
  for (const auto& l : labels) s.insert(universe->index_of(l));
  return s;
}

StateSet StateSet::from_words(UniversePtr universe, std::vector<Word> words) {
  return StateSet(std::move(universe), std::move(words));
}

std::size_t StateSet::count() const { return kernels::active().popcount(words_); }

bool StateSet::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> StateSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::string> StateSet::labels() const {
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(universe_->label(i));
  return out;
}

bool StateSet::subset_of(const StateSet& other) const {
  require_same(universe_, other.universe_, "subset_of");
  return kernels::active().is_subset(words_, other.words_);
}

bool StateSet::intersects(const StateSet& other) const {
  require_same(universe_, other.universe_, "intersects");
  return kernels::active().intersects(words_, other.words_);
}

StateSet StateSet::operator&(const StateSet& other) const {
  require_same(universe_, other.universe_, "intersection");
  StateSet r = *this;
  kernels::active().and_into(r.words_, other.words_);
  return r;
}

StateSet StateSet::operator|(const StateSet& other) const {
  require_same(universe_, other.universe_, "union");
  StateSet r = *this;
  kernels::active().or_into(r.words_, other.words_);
  return r;
}

StateSet StateSet::operator-(const StateSet& other) const {
  require_same(universe_, other.universe_, "difference");
  StateSet r = *this;
  kernels::active().andnot_into(r.words_, other.words_);
  return r;
}

StateSet StateSet::complement() const {
  std::vector<Word> w(words_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = ~words_[i];
  return StateSet(universe_, std::move(w));
}

bool StateSet::operator==(const StateSet& other) const {
  return same_universe(universe_, other.universe_) &&
         kernels::active().equal(words_, other.words_);
}

bool StateSet::shortlex_less(const StateSet& other) const {
  const std::size_t a = count();
  const std::size_t b = other.count();
  if (a != b) return a < b;
  const auto x = indices();
  const auto y = other.indices();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(const StateSet& s) {
  std::ostringstream out;
  const auto& numeric = s.universe()->numeric();
  if (s.is_empty()) return "{}";
  if (!numeric) {
    out << '{';
    bool first = true;
    for (const auto& l : s.labels()) {
      if (!first) out << ", ";
      out << l;
      first = false;
    }
    out << '}';
    return out.str();
  }
  std::vector<long> values;
  for (std::size_t i : s.indices()) values.push_back((*numeric)[i]);
  std::sort(values.begin(), values.end());
  bool first = true;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (!first) out << " U ";
    out << '[' << values[i] << ',' << values[j] << ']';
    first = false;
    i = j + 1;
  }
  return out.str();
}

}  // namespace gbm
