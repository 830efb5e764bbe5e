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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbm/frames/frame.hpp"
#include "gbm/logic/formula.hpp"

namespace gbm::semantics {

using fca::Concept;
using frames::ComplexAlgebra;
using frames::GraphFrame;
using logic::FormulaPtr;
using logic::Sequent;

using AlgebraPtr = std::shared_ptr<const ComplexAlgebra>;
using Valuation = std::map<std::string, Concept>;

inline AlgebraPtr make_algebra(GraphFrame frame) {
  return std::make_shared<const ComplexAlgebra>(std::move(frame));
}

/// A frame together with V: Prop → F⁺.
class Model {
 public:
  /// Throws InvalidStructure when some V(p) is not a concept.
  Model(AlgebraPtr algebra, Valuation valuation);

  /// Each B is closed to (B^[10], B^[1]). Names whose B was not already
  /// stable are appended to `unstable`.
  static Model from_extents(AlgebraPtr algebra, const std::map<std::string, StateSet>& extents,
                            std::vector<std::string>* unstable = nullptr);

  const ComplexAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const GraphFrame& frame() const noexcept { return algebra_->frame(); }
  const Valuation& valuation() const noexcept { return valuation_; }
  const Concept& value(const std::string& prop) const;  // throws Error when unbound

  /// (⟦φ⟧, (φ)), computed compositionally with shared subterms evaluated once.
  Concept eval(const FormulaPtr& f) const;

  bool forces(std::size_t z, const FormulaPtr& f) const { return eval(f).extent.contains(z); }
  bool refutes(std::size_t z, const FormulaPtr& f) const { return eval(f).intent.contains(z); }

 private:
  AlgebraPtr algebra_;
  Valuation valuation_;
};

/// Satisfaction and refutation sets from the clause-by-clause recursion,
/// quantifying over successors state by state. Slow; used to cross-check eval.
struct Pointwise {
  StateSet forced;
  StateSet refuted;
};
Pointwise pointwise(const Model& m, const FormulaPtr& f);

/// (z, z') with z ⊩ φ, z' ≻ ψ and z E z'.
using SequentWitness = std::pair<std::size_t, std::size_t>;

std::optional<SequentWitness> sequent_counterexample(const Model& m, const Sequent& s);
inline bool sequent_true(const Model& m, const Sequent& s) { return !sequent_counterexample(m, s); }

inline constexpr std::size_t kDefaultValuationCap = 1'000'000;

struct ValidityResult {
  bool valid = true;
  std::size_t valuations = 0;
  std::optional<Valuation> countermodel;
  std::optional<SequentWitness> witness;
};

/// Sweeps every valuation of the sequent's propositions into F⁺. Throws
/// CapExceeded when (#concepts)^(#props) > cap.
ValidityResult frame_valid(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap = kDefaultValuationCap);

/// F⁺ ⊨ φ ⊢ ψ: eval(φ) ≤ eval(ψ) in the concept order for every valuation.
/// A failure witness is (z, z) for some z in ⟦φ⟧ outside ⟦ψ⟧.
ValidityResult algebra_valid(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap = kDefaultValuationCap);

struct DualityResult {
  bool frame_side;
  bool algebra_side;
  bool agree() const { return frame_side == algebra_side; }
};
DualityResult check_duality(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap = kDefaultValuationCap);

/// eval's extent and intent equal the pointwise satisfaction and refutation sets.
bool check_pointwise_vs_algebraic(const Model& m, const FormulaPtr& f);

/// Calls fn(valuation) for every assignment of `props` into the concepts of
/// F⁺, stopping early when fn returns false. Returns the number visited.
std::size_t for_each_valuation(const fca::ConceptLattice& lattice, const std::vector<std::string>& props,
                               std::size_t cap, const std::function<bool(const Valuation&)>& fn);

}  // namespace gbm::semantics
