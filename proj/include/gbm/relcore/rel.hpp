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
#include <span>
#include <utility>
#include <vector>

#include "gbm/relcore/state_set.hpp"

namespace gbm {

/// Binary relation R ⊆ source × target as a dense bit matrix, row-major:
/// row a holds R[{a}] = {b | a R b}.
class Rel {
 public:
  using Word = StateSet::Word;

  Rel(UniversePtr source, UniversePtr target);  // empty relation
  static Rel empty(UniversePtr source, UniversePtr target) { return Rel(std::move(source), std::move(target)); }
  static Rel full(UniversePtr source, UniversePtr target);
  static Rel identity(UniversePtr universe);
  static Rel from_pairs(UniversePtr source, UniversePtr target,
                        std::span<const std::pair<std::size_t, std::size_t>> pairs);
  static Rel from_pairs(UniversePtr universe,
                        std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);

  const UniversePtr& source() const noexcept { return source_; }
  const UniversePtr& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return source_->size(); }
  std::size_t cols() const noexcept { return target_->size(); }
  bool is_square() const { return same_universe(source_, target_); }

  bool contains(std::size_t a, std::size_t b) const {
    return (row_words(a)[b / 64] >> (b % 64)) & 1U;
  }
  void insert(std::size_t a, std::size_t b) { row_words_mut(a)[b / 64] |= Word{1} << (b % 64); }
  void erase(std::size_t a, std::size_t b) { row_words_mut(a)[b / 64] &= ~(Word{1} << (b % 64)); }

  std::span<const Word> row_words(std::size_t a) const {
    return {bits_.data() + a * stride_, stride_};
  }
  std::span<Word> row_words_mut(std::size_t a) { return {bits_.data() + a * stride_, stride_}; }

  /// {b | a R b}
  StateSet row(std::size_t a) const;
  /// {a | a R b}
  StateSet column(std::size_t b) const;
  void set_row(std::size_t a, const StateSet& s);

  std::size_t count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool subset_of(const Rel& other) const;
  bool operator==(const Rel& other) const;

  Rel operator&(const Rel& other) const;
  Rel operator|(const Rel& other) const;
  Rel operator-(const Rel& other) const;

 private:
  void check_same_shape(const Rel& other, const char* what) const;

  UniversePtr source_;
  UniversePtr target_;
  std::size_t stride_;
  std::vector<Word> bits_;
};

}  // namespace gbm
