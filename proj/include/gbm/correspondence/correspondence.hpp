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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "gbm/semantics/model.hpp"

namespace gbm::correspondence {

using frames::ComplexAlgebra;
using frames::GraphFrame;
using semantics::AlgebraPtr;

enum class AxiomId { T_box, T_dia, Four_box, Four_dia, Tc_box, Tc_dia };

inline constexpr std::array<AxiomId, 6> kAllAxioms = {AxiomId::T_box,    AxiomId::T_dia,  AxiomId::Four_box,
                                                      AxiomId::Four_dia, AxiomId::Tc_box, AxiomId::Tc_dia};

std::string_view axiom_name(AxiomId ax);
/// Accepts the enum spelling ("Four_box"), lower case, or the item number 1..6.
std::optional<AxiomId> axiom_from_name(std::string_view name);
/// The axiom over the single variable p, e.g. "[]p |- [][]p".
logic::Sequent axiom_sequent(AxiomId ax);
std::string_view condition_text(AxiomId ax);

/// E ⊆ R
bool is_E_reflexive(const Rel& e, const Rel& r);
/// R ⊆ E
bool is_sub_E(const Rel& e, const Rel& r);
/// R ∘_E R ⊆ R
bool is_circ_transitive(const Rel& e, const Rel& r);
/// R •_E R ⊆ R
bool is_bullet_transitive(const Rel& e, const Rel& r);

/// 1: E ⊆ R□   2: E ⊆ R■   3: R□ •_E R□ ⊆ R□
/// 4: R◇ ∘_E R◇ ⊆ R◇   5: R□ ⊆ E   6: R■ ⊆ E
bool condition_of(AxiomId ax, const GraphFrame& frame);

struct Verdict {
  AxiomId axiom;
  bool valid;
  bool condition;
  semantics::ValidityResult detail;

  bool agree() const { return valid == condition; }
};

Verdict check_correspondence(AxiomId ax, const AlgebraPtr& algebra,
                             std::size_t cap = semantics::kDefaultValuationCap);

/// When E ⊄ R□: a pair z E y with not z R□ y, and V(p) = (y^[0], y^[01])
/// under which □p ⊢ p fails.
struct TBoxWitness {
  std::size_t z;
  std::size_t y;
  semantics::Valuation valuation;
};
std::optional<TBoxWitness> t_box_witness(const ComplexAlgebra& ca);

/// Largest box-compatible relation inside `candidate`: the complement is grown
/// until every column is [10]-closed and every row is [01]-closed.
Rel repair_box_compatible(const Rel& e, const Rel& candidate);

/// Seeded source of random reflexive graphs and compatible relations.
class FrameGenerator {
 public:
  explicit FrameGenerator(std::uint64_t seed) : rng_(seed) {}

  Rel random_relation(const UniversePtr& u, double density);
  Rel random_reflexive(const UniversePtr& u, double density);
  /// Mixes relations above E, below E, arbitrary repaired ones and E itself.
  Rel random_box_compatible(const Rel& e);
  Rel random_dia_compatible(const Rel& e);

  GraphFrame frame(std::size_t n);
  /// |Z| uniform in [lo, hi].
  GraphFrame frame(std::size_t lo, std::size_t hi);

  std::mt19937_64& rng() noexcept { return rng_; }

 private:
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  std::mt19937_64 rng_;
};

}  // namespace gbm::correspondence
