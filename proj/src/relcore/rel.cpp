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

#include "gbm/relcore/rel.hpp"

#include <bit>

#include "gbm/error.hpp"
#include "gbm/relcore/kernels.hpp"

namespace gbm {

Rel::Rel(UniversePtr source, UniversePtr target)
    : source_(std::move(source)),
      target_(std::move(target)),
      stride_(StateSet::words_for(target_->size())),
      bits_(source_->size() * stride_, 0) {}

Rel Rel::full(UniversePtr source, UniversePtr target) {
  Rel r(std::move(source), std::move(target));
  const StateSet all = StateSet::full(r.target_);
  for (std::size_t a = 0; a < r.rows(); ++a) r.set_row(a, all);
  return r;
}

Rel Rel::identity(UniversePtr universe) {
  Rel r(universe, universe);
  for (std::size_t a = 0; a < r.rows(); ++a) r.insert(a, a);
  return r;
}

Rel Rel::from_pairs(UniversePtr source, UniversePtr target,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Rel r(std::move(source), std::move(target));
  for (auto [a, b] : pairs) {
    if (a >= r.rows() || b >= r.cols()) throw Error("Rel: pair index out of range");
    r.insert(a, b);
  }
  return r;
}

Rel Rel::from_pairs(UniversePtr universe,
                    std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  return from_pairs(universe, universe,
                    std::span<const std::pair<std::size_t, std::size_t>>(pairs.begin(), pairs.size()));
}

StateSet Rel::row(std::size_t a) const {
  auto w = row_words(a);
  return StateSet::from_words(target_, std::vector<Word>(w.begin(), w.end()));
}

StateSet Rel::column(std::size_t b) const {
  StateSet s(source_);
  for (std::size_t a = 0; a < rows(); ++a)
    if (contains(a, b)) s.insert(a);
  return s;
}

void Rel::set_row(std::size_t a, const StateSet& s) {
  require_same(target_, s.universe(), "Rel::set_row");
  auto dst = row_words_mut(a);
  auto src = s.words();
  std::copy(src.begin(), src.end(), dst.begin());
}

std::size_t Rel::count() const { return kernels::active().popcount(bits_); }

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rows(); ++a) {
    auto w = row_words(a);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word bits = w[i];
      while (bits) {
        out.emplace_back(a, i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

void Rel::check_same_shape(const Rel& other, const char* what) const {
  require_same(source_, other.source_, what);
  require_same(target_, other.target_, what);
}

bool Rel::subset_of(const Rel& other) const {
  check_same_shape(other, "Rel::subset_of");
  return kernels::active().is_subset(bits_, other.bits_);
}

bool Rel::operator==(const Rel& other) const {
  return same_universe(source_, other.source_) && same_universe(target_, other.target_) &&
         kernels::active().equal(bits_, other.bits_);
}

Rel Rel::operator&(const Rel& other) const {
  check_same_shape(other, "Rel intersection");
  Rel r = *this;
  kernels::active().and_into(r.bits_, other.bits_);
  return r;
}

Rel Rel::operator|(const Rel& other) const {
  check_same_shape(other, "Rel union");
  Rel r = *this;
  kernels::active().or_into(r.bits_, other.bits_);
  return r;
}

Rel Rel::operator-(const Rel& other) const {
  check_same_shape(other, "Rel difference");
  Rel r = *this;
  kernels::active().andnot_into(r.bits_, other.bits_);
  return r;
}

}  // namespace gbm
