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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gbm/relcore/universe.hpp"

namespace gbm {

/// Subset of a universe, packed one bit per state. Bits past size() are
/// always zero.
class StateSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  static std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

  explicit StateSet(UniversePtr universe);  // empty set
  static StateSet empty(UniversePtr universe) { return StateSet(std::move(universe)); }
  static StateSet full(UniversePtr universe);
  static StateSet of(UniversePtr universe, std::initializer_list<std::size_t> members);
  static StateSet of(UniversePtr universe, std::span<const std::size_t> members);
  static StateSet from_labels(UniversePtr universe, const std::vector<std::string>& labels);
  /// Takes ownership of packed words; trailing bits are masked off.
  static StateSet from_words(UniversePtr universe, std::vector<Word> words);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }

  bool contains(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void insert(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void erase(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool is_empty() const;
  bool is_full() const { return count() == universe_size(); }
  std::vector<std::size_t> indices() const;
  std::vector<std::string> labels() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> mutable_words() noexcept { return words_; }

  bool subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  StateSet operator&(const StateSet& other) const;
  StateSet operator|(const StateSet& other) const;
  StateSet operator-(const StateSet& other) const;  // difference
  StateSet complement() const;

  bool operator==(const StateSet& other) const;

  /// Shortlex order on member indices: smaller sets first, then
  /// lexicographic on the sorted index list. Used for deterministic output.
  bool shortlex_less(const StateSet& other) const;

 private:
  StateSet(UniversePtr universe, std::vector<Word> words);
  void mask_tail();

  UniversePtr universe_;
  std::vector<Word> words_;
};

/// "{a, b}" for symbolic universes; interval runs "[524,556] U [560,561]"
/// when every label is an integer. The empty set prints as "{}".
std::string to_string(const StateSet& s);

}  // namespace gbm
