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
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gbm/fca/context.hpp"

namespace gbm::frames {

using fca::Concept;

enum class Check { Enforce, Unchecked };

/// (Z, E, R□, R◇) with E reflexive. R■ and R◆ are derived on demand as the
/// converses of R◇ and R□.
class GraphFrame {
 public:
  /// Throws InvalidStructure when E is not reflexive, or (under
  /// Check::Enforce) when R□ or R◇ is not E-compatible.
  static GraphFrame make(Rel e, Rel rbox, Rel rdia, Check check = Check::Enforce);

  const UniversePtr& universe() const noexcept { return e_.source(); }
  std::size_t size() const noexcept { return e_.rows(); }
  const Rel& E() const noexcept { return e_; }
  const Rel& Rbox() const noexcept { return rbox_; }
  const Rel& Rdia() const noexcept { return rdia_; }
  Rel Rblackdia() const { return converse(rbox_); }
  Rel Rblacksq() const { return converse(rdia_); }

  bool operator==(const GraphFrame& other) const {
    return e_ == other.e_ && rbox_ == other.rbox_ && rdia_ == other.rdia_;
  }

 private:
  GraphFrame(Rel e, Rel rbox, Rel rdia)
      : e_(std::move(e)), rbox_(std::move(rbox)), rdia_(std::move(rdia)) {}

  Rel e_;
  Rel rbox_;
  Rel rdia_;
};

/// P_X = (Z, Z, Eᶜ).
fca::FormalContext polarity_of(const GraphFrame& frame);
fca::FormalContext polarity_of(const Rel& e);

/// One failed singleton inclusion.
struct CompatViolation {
  std::string relation;   // "Rbox" or "Rdia"
  std::string condition;  // the inclusion that failed
  std::size_t state;
};

struct CompatReport {
  std::vector<std::size_t> non_reflexive;
  std::vector<CompatViolation> violations;

  bool ok() const { return non_reflexive.empty() && violations.empty(); }
};

/// (R⁽⁰⁾[y])^[10] ⊆ R⁽⁰⁾[y] and (R⁽¹⁾[b])^[01] ⊆ R⁽¹⁾[b] for all b, y, with
/// square-bracket images. Columns of Rᶜ must be extents and rows of Rᶜ intents.
std::vector<CompatViolation> box_violations(const Rel& e, const Rel& r, const std::string& name = "Rbox");

/// (R^[0][b])^[01] ⊆ R^[0][b] and (R^[1][y])^[10] ⊆ R^[1][y]: the conditions
/// under which ⟨R⟩ maps concepts to concepts. Equivalent to the converse of R
/// passing box_violations.
std::vector<CompatViolation> dia_violations(const Rel& e, const Rel& r, const std::string& name = "Rdia");

bool is_box_compatible(const Rel& e, const Rel& r);
bool is_dia_compatible(const Rel& e, const Rel& r);

CompatReport check_e_compat(const Rel& e, const Rel& rbox, const Rel& rdia);
CompatReport check_e_compat(const GraphFrame& frame);

/// The three formulations of each half of box-compatibility, evaluated
/// independently. Set-level items range over all subsets, so |Z| ≤ 16.
struct CompatEquivalents {
  std::array<bool, 3> item1;  // singleton extents / all Y / R^[1][B] = R^[1][B^[10]]
  std::array<bool, 3> item2;  // singleton intents / all B / R^[0][Y] = R^[0][Y^[01]]

  bool consistent() const {
    return item1[0] == item1[1] && item1[1] == item1[2] && item2[0] == item2[1] &&
           item2[1] == item2[2];
  }
};

inline constexpr std::size_t kEquivalentsMaxStates = 16;

CompatEquivalents check_e_compat_equivalents(const Rel& e, const Rel& r);

/// F⁺: the concept lattice of P_X with [R□], ⟨R◇⟩, [R■], ⟨R◆⟩. The lattice
/// is enumerated on first use.
class ComplexAlgebra {
 public:
  explicit ComplexAlgebra(GraphFrame frame, std::size_t cap = fca::kDefaultConceptCap);

  const GraphFrame& frame() const noexcept { return frame_; }
  const fca::FormalContext& context() const noexcept { return context_; }
  const fca::ConceptLattice& lattice() const;

  Concept box(const Concept& c) const;
  Concept dia(const Concept& c) const;
  Concept blackbox(const Concept& c) const;
  Concept blackdia(const Concept& c) const;

  Concept top() const;
  Concept bottom() const;
  Concept meet(const Concept& c, const Concept& d) const { return fca::meet(context_, c, d); }
  Concept join(const Concept& c, const Concept& d) const { return fca::join(context_, c, d); }

  /// Closed pair generated by an arbitrary extent candidate: (B^[10], B^[1]).
  Concept close_extent(const StateSet& b) const { return fca::concept_from_extent(context_, b); }

 private:
  GraphFrame frame_;
  fca::FormalContext context_;
  std::size_t cap_;
  Rel rblackdia_;
  Rel rblacksq_;
  mutable std::once_flag lattice_once_;
  mutable std::optional<fca::ConceptLattice> lattice_;
};

inline Concept op_box(const ComplexAlgebra& ca, const Concept& c) { return ca.box(c); }
inline Concept op_dia(const ComplexAlgebra& ca, const Concept& c) { return ca.dia(c); }
inline Concept op_blackbox(const ComplexAlgebra& ca, const Concept& c) { return ca.blackbox(c); }
inline Concept op_blackdia(const ComplexAlgebra& ca, const Concept& c) { return ca.blackdia(c); }

/// ⟨R◆⟩c ≤ d ⇔ c ≤ [R□]d and ⟨R◇⟩c ≤ d ⇔ c ≤ [R■]d for all concepts c, d.
bool check_adjunction(const ComplexAlgebra& ca);

/// [R□] preserves the meet and ⟨R◇⟩ the join of every subset of concepts,
/// the empty subset included. Throws CapExceeded above 2^max_log2 subsets.
bool check_complete_preservation(const ComplexAlgebra& ca, std::size_t max_log2 = 20);

/// Every operator maps every concept to a concept.
bool operators_well_defined(const ComplexAlgebra& ca);

}  // namespace gbm::frames
