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
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gbm/frames/frame.hpp"
#include "gbm/logic/formula.hpp"

namespace gbm::algebra {

using Elem = std::size_t;
using Table = std::vector<Elem>;

/// Finite bounded lattice given by its order; meets and joins are tabulated.
class FiniteLattice {
 public:
  /// `leq` must be a partial order on `carrier` in which every pair has a
  /// meet and a join. Throws InvalidStructure otherwise.
  static FiniteLattice from_order(const Rel& leq);
  /// Reflexive-transitive closure of `pairs`, then from_order.
  static FiniteLattice generated_by(UniversePtr carrier, const std::vector<std::pair<Elem, Elem>>& pairs);
  static FiniteLattice chain(std::size_t n);

  const UniversePtr& carrier() const noexcept { return order_.source(); }
  std::size_t size() const noexcept { return order_.rows(); }
  const std::string& label(Elem a) const { return carrier()->label(a); }
  const Rel& order() const noexcept { return order_; }

  bool leq(Elem a, Elem b) const { return order_.contains(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem top() const noexcept { return top_; }
  Elem bottom() const noexcept { return bottom_; }

  /// {b | a ≤ b} and {b | b ≤ a}
  StateSet up_set(Elem a) const { return order_.row(a); }
  StateSet down_set(Elem a) const { return order_.column(a); }

 private:
  explicit FiniteLattice(Rel order);

  Rel order_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem top_ = 0;
  Elem bottom_ = 0;
};

struct Normality {
  bool box_top = true;   // □⊤ = ⊤
  bool box_meet = true;  // □(a∧b) = □a ∧ □b
  bool dia_bot = true;   // ◇⊥ = ⊥
  bool dia_join = true;  // ◇(a∨b) = ◇a ∨ ◇b

  bool ok() const { return box_top && box_meet && dia_bot && dia_join; }
};

Normality check_normality(const FiniteLattice& l, const Table& box, const Table& dia);

/// Lattice with normal □ and ◇. The adjoints ◆ ⊣ □ and ◇ ⊣ ■ always exist
/// on a finite lattice and are tabulated as well.
class ModalAlgebra {
 public:
  /// Throws InvalidStructure when a table has the wrong size or is not normal.
  static ModalAlgebra make(FiniteLattice lattice, Table box, Table dia);
  static ModalAlgebra identity(FiniteLattice lattice);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  Elem box(Elem a) const { return box_[a]; }
  Elem dia(Elem a) const { return dia_[a]; }
  Elem blackbox(Elem a) const { return blackbox_[a]; }
  Elem blackdia(Elem a) const { return blackdia_[a]; }
  const Table& box_table() const noexcept { return box_; }
  const Table& dia_table() const noexcept { return dia_; }

 private:
  ModalAlgebra(FiniteLattice lattice, Table box, Table dia);

  FiniteLattice lattice_;
  Table box_;
  Table dia_;
  Table blackbox_;
  Table blackdia_;
};

/// Nonempty filters and ideals, in shortlex order.
std::vector<StateSet> filters(const FiniteLattice& l);
std::vector<StateSet> ideals(const FiniteLattice& l);
bool is_filter(const FiniteLattice& l, const StateSet& f);
bool is_ideal(const FiniteLattice& l, const StateSet& j);

/// ⌊K⌋ and ⌈K⌉; the empty set generates {⊤} and {⊥}.
StateSet filter_gen(const FiniteLattice& l, const StateSet& k);
StateSet ideal_gen(const FiniteLattice& l, const StateSet& k);

/// □K = {□u | u ∈ K} and ◇K = {◇u | u ∈ K}
StateSet box_image(const ModalAlgebra& a, const StateSet& k);
StateSet dia_image(const ModalAlgebra& a, const StateSet& k);

/// For all filters F and ideals J: F ∩ □J ≠ ∅ ⇔ F ∩ ⌈□J⌉ ≠ ∅, and
/// J ∩ ◇F ≠ ∅ ⇔ J ∩ ⌊◇F⌋ ≠ ∅.
bool check_filtidl_lemma(const ModalAlgebra& a);

/// Strict: states are pairs of a nonempty filter and a nonempty ideal.
/// Loose: either component may also be empty, provided neither is the
/// whole lattice.
enum class XLMode { Strict, Loose };

struct XLGraph {
  std::vector<std::pair<StateSet, StateSet>> states;  // (F_z, J_z), labelled s0, s1, ...
  UniversePtr universe;
  Rel E;  // z E z' iff F_z ∩ J_z' = ∅
};

/// Throws InvalidStructure when no state survives (the one-element lattice
/// in strict mode).
XLGraph build_graph_XL(const FiniteLattice& l, XLMode mode = XLMode::Strict);

struct FAFrame {
  XLGraph graph;
  frames::GraphFrame frame;
};

/// X_L of the underlying lattice with x R□ y iff F_x ∩ □J_y = ∅ and
/// x R◇ y iff J_x ∩ ◇F_y = ∅.
FAFrame build_frame_FA(const ModalAlgebra& a, XLMode mode = XLMode::Strict,
                       frames::Check check = frames::Check::Enforce);

/// Concept lattice as a FiniteLattice; element i is concept i.
FiniteLattice lattice_of(const fca::ConceptLattice& concepts);
/// F⁺ with [R□] and ⟨R◇⟩ as tables.
ModalAlgebra modal_algebra_of(const frames::ComplexAlgebra& ca);

/// Order isomorphism a → b as an element map, if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
/// Isomorphism that also commutes with □ and ◇.
std::optional<std::vector<Elem>> find_isomorphism(const ModalAlgebra& a, const ModalAlgebra& b);

/// X_L⁺ ≅ L.
bool check_canonical_extension(const FiniteLattice& l, XLMode mode = XLMode::Strict);
/// F_A⁺ ≅ A as modal algebras.
bool check_complex_algebra_iso(const ModalAlgebra& a, XLMode mode = XLMode::Strict);

using Assignment = std::map<std::string, Elem>;

Elem evaluate(const ModalAlgebra& a, const logic::Formula& f, const Assignment& v);

struct AlgebraValidity {
  bool valid = true;
  std::size_t assignments = 0;
  std::optional<Assignment> counterexample;
};

/// φ ≤ ψ under every assignment of the sequent's propositions. Throws
/// CapExceeded when |A|^(#props) > cap.
AlgebraValidity algebra_validates(const ModalAlgebra& a, const logic::Sequent& s, std::size_t cap = 1'000'000);

/// All lattices with n elements up to isomorphism, deterministic order.
std::vector<FiniteLattice> all_lattices(std::size_t n);
/// Every table f with f(⊤) = ⊤ and f(a∧b) = f(a)∧f(b).
std::vector<Table> all_normal_boxes(const FiniteLattice& l);
/// Every table f with f(⊥) = ⊥ and f(a∨b) = f(a)∨f(b).
std::vector<Table> all_normal_dias(const FiniteLattice& l);

ModalAlgebra random_modal_algebra(const FiniteLattice& l, std::mt19937_64& rng);

}  // namespace gbm::algebra
