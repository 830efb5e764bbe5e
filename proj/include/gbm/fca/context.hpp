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
#include <optional>
#include <string>
#include <vector>

#include "gbm/relcore/ops.hpp"

namespace gbm::fca {

/// Polarity (A, X, I) with I ⊆ A × X.
class FormalContext {
 public:
  explicit FormalContext(Rel incidence);

  const UniversePtr& objects() const noexcept { return incidence_.source(); }
  const UniversePtr& attributes() const noexcept { return incidence_.target(); }
  const Rel& incidence() const noexcept { return incidence_; }

 private:
  Rel incidence_;
};

/// Galois-stable pair. `extent` ⊆ A, `intent` ⊆ X.
struct Concept {
  StateSet extent;
  StateSet intent;

  bool operator==(const Concept& other) const {
    return extent == other.extent && intent == other.intent;
  }
};

/// B↑ = I⁽¹⁾[B]
StateSet up(const FormalContext& ctx, const StateSet& b);
/// Y↓ = I⁽⁰⁾[Y]
StateSet down(const FormalContext& ctx, const StateSet& y);
/// B↑↓
StateSet closure(const FormalContext& ctx, const StateSet& b);
/// Y↓↑
StateSet dual_closure(const FormalContext& ctx, const StateSet& y);
bool is_stable(const FormalContext& ctx, const StateSet& b);
bool is_stable_intent(const FormalContext& ctx, const StateSet& y);

/// (B↑↓, B↑)
Concept concept_from_extent(const FormalContext& ctx, const StateSet& b);
/// (Y↓, Y↓↑)
Concept concept_from_intent(const FormalContext& ctx, const StateSet& y);

inline constexpr std::size_t kDefaultConceptCap = std::size_t{1} << 16;

/// Objects at or below this count are enumerated by scanning all subsets;
/// larger contexts use lectic-order closure enumeration.
inline constexpr std::size_t kSubsetScanLimit = 20;

enum class Enumeration { Auto, SubsetScan, NextClosure };

/// All concepts of a context, sorted shortlex by extent, with the order
/// matrix c ≤ d iff extent(c) ⊆ extent(d).
class ConceptLattice {
 public:
  const FormalContext& context() const noexcept { return context_; }
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  const Concept& operator[](std::size_t i) const { return concepts_.at(i); }

  bool leq(std::size_t c, std::size_t d) const { return order_[c * size() + d]; }
  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }

  /// Index of the concept with this extent, if it is one.
  std::optional<std::size_t> find_extent(const StateSet& extent) const;
  std::size_t index_of(const Concept& c) const;  // throws Error when absent

  std::size_t meet(std::size_t c, std::size_t d) const;
  std::size_t join(std::size_t c, std::size_t d) const;

  /// Covering pairs (c, d): c < d with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  friend ConceptLattice enumerate_concepts(const FormalContext&, std::size_t, Enumeration);
  ConceptLattice(FormalContext ctx, std::vector<Concept> concepts);

  FormalContext context_;
  std::vector<Concept> concepts_;
  std::vector<bool> order_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Throws CapExceeded once more than `cap` concepts have been found.
ConceptLattice enumerate_concepts(const FormalContext& ctx,
                                  std::size_t cap = kDefaultConceptCap,
                                  Enumeration method = Enumeration::Auto);

/// meet: extent ⟦c⟧ ∩ ⟦d⟧; join: intent (c) ∩ (d).
Concept meet(const FormalContext& ctx, const Concept& c, const Concept& d);
Concept join(const FormalContext& ctx, const Concept& c, const Concept& d);

}  // namespace gbm::fca
