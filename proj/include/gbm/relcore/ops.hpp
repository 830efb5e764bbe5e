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

// Set and relation operators on finite universes. Notation follows the usual
// polarity conventions: for T ⊆ U × V,
//
//   round1(T, U') = {v | ∀u ∈ U'. u T v}       round0(T, V') = {u | ∀v ∈ V'. u T v}
//   square1(T, U') = {v | ∀u ∈ U'. ¬ u T v}    square0(T, V') = {u | ∀v ∈ V'. ¬ u T v}
//
// so square_i(T, ·) = round_i(complement(T), ·). All functions throw
// UniverseMismatch when an argument lives over the wrong universe.

#include "gbm/relcore/rel.hpp"

namespace gbm {

/// R[S] = {t | ∃s ∈ S. s R t}
StateSet image(const Rel& r, const StateSet& s);
/// R⁻¹[T] = {s | ∃t ∈ T. s R t}
StateSet preimage(const Rel& r, const StateSet& t);

/// ⟨R⟩W = R⁻¹[W]
inline StateSet dia_sem(const Rel& r, const StateSet& w) { return preimage(r, w); }
/// [R]W = (R⁻¹[Wᶜ])ᶜ
StateSet box_sem(const Rel& r, const StateSet& w);

StateSet round1(const Rel& t, const StateSet& u);
StateSet round0(const Rel& t, const StateSet& v);
StateSet square1(const Rel& t, const StateSet& u);
StateSet square0(const Rel& t, const StateSet& v);

Rel complement(const Rel& r);
Rel converse(const Rel& r);
/// Ordinary composition: a (R;S) c iff ∃b. a R b and b S c.
Rel rel_compose(const Rel& r, const Rel& s);
inline Rel identity(const UniversePtr& u) { return Rel::identity(u); }

/// x (R ∘_E S) a iff ∃b. x R b and E⁽¹⁾[b] ⊆ S⁽⁰⁾[a].
/// All three relations must be square over one universe.
Rel comp_circ(const Rel& r, const Rel& s, const Rel& e);

/// a (R •_E S) x iff ∃y. a R y and E⁽⁰⁾[y] ⊆ S⁽⁰⁾[x].
Rel comp_bullet(const Rel& r, const Rel& s, const Rel& e);

bool is_reflexive(const Rel& r);

}  // namespace gbm
