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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gbm {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Finite, ordered carrier of states. Indices 0..size()-1 are stable for the
/// lifetime of the object; labels are distinct.
class Universe {
 public:
  static UniversePtr make(std::vector<std::string> labels);
  /// States "0", "1", ..., "n-1".
  static UniversePtr indexed(std::size_t n);
  /// Integer labels lo..hi inclusive.
  static UniversePtr range(long lo, long hi);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws Error

  /// Integer value of every label, when all labels are integers.
  const std::optional<std::vector<long>>& numeric() const noexcept { return numeric_; }

  /// Labels are lo, lo+1, ..., hi in index order.
  bool is_contiguous_range() const noexcept;

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }

 private:
  explicit Universe(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::vector<long>> numeric_;
};

/// Same object or equal labels.
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same(const UniversePtr& a, const UniversePtr& b, std::string_view what);

}  // namespace gbm
