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

#include "gbm/relcore/ops.hpp"

#include "gbm/error.hpp"
#include "gbm/relcore/kernels.hpp"

namespace gbm {
namespace {

void require_square(const Rel& r, const UniversePtr& z, const char* what) {
  require_same(r.source(), z, what);
  require_same(r.target(), z, what);
}

}  // namespace

StateSet image(const Rel& r, const StateSet& s) {
  require_same(r.source(), s.universe(), "image");
  const auto& k = kernels::active();
  StateSet out(r.target());
  for (std::size_t a : s.indices()) k.or_into(out.mutable_words(), r.row_words(a));
  return out;
}

StateSet preimage(const Rel& r, const StateSet& t) {
  require_same(r.target(), t.universe(), "preimage");
  const auto& k = kernels::active();
  StateSet out(r.source());
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (k.intersects(r.row_words(a), t.words())) out.insert(a);
  return out;
}

StateSet box_sem(const Rel& r, const StateSet& w) {
  return preimage(r, w.complement()).complement();
}

StateSet round1(const Rel& t, const StateSet& u) {
  require_same(t.source(), u.universe(), "round1");
  const auto& k = kernels::active();
  StateSet out = StateSet::full(t.target());
  for (std::size_t a : u.indices()) k.and_into(out.mutable_words(), t.row_words(a));
  return out;
}

StateSet round0(const Rel& t, const StateSet& v) {
  require_same(t.target(), v.universe(), "round0");
  const auto& k = kernels::active();
  StateSet out(t.source());
  for (std::size_t a = 0; a < t.rows(); ++a)
    if (k.is_subset(v.words(), t.row_words(a))) out.insert(a);
  return out;
}

StateSet square1(const Rel& t, const StateSet& u) {
  require_same(t.source(), u.universe(), "square1");
  // {v | ∀u ∈ U. ¬ u T v} is the complement of the forward image.
  return image(t, u).complement();
}

StateSet square0(const Rel& t, const StateSet& v) {
  require_same(t.target(), v.universe(), "square0");
  const auto& k = kernels::active();
  StateSet out(t.source());
  for (std::size_t a = 0; a < t.rows(); ++a)
    if (!k.intersects(t.row_words(a), v.words())) out.insert(a);
  return out;
}

Rel complement(const Rel& r) {
  return Rel::full(r.source(), r.target()) - r;
}

Rel converse(const Rel& r) {
  Rel out(r.target(), r.source());
  for (auto [a, b] : r.pairs()) out.insert(b, a);
  return out;
}

Rel rel_compose(const Rel& r, const Rel& s) {
  require_same(r.target(), s.source(), "rel_compose");
  const auto& k = kernels::active();
  Rel out(r.source(), s.target());
  for (std::size_t a = 0; a < r.rows(); ++a) {
    auto dst = out.row_words_mut(a);
    for (std::size_t b : r.row(a).indices()) k.or_into(dst, s.row_words(b));
  }
  return out;
}

Rel comp_circ(const Rel& r, const Rel& s, const Rel& e) {
  const UniversePtr& z = e.source();
  require_square(e, z, "comp_circ");
  require_square(r, z, "comp_circ");
  require_square(s, z, "comp_circ");
  const auto& k = kernels::active();
  const Rel s_t = converse(s);  // row a of s_t is S⁽⁰⁾[a]
  Rel out(z, z);
  StateSet witnesses(z);
  for (std::size_t a = 0; a < z->size(); ++a) {
    // W_a = {b | E⁽¹⁾[b] ⊆ S⁽⁰⁾[a]}; E⁽¹⁾[b] is row b of E.
    witnesses = StateSet(z);
    for (std::size_t b = 0; b < z->size(); ++b)
      if (k.is_subset(e.row_words(b), s_t.row_words(a))) witnesses.insert(b);
    if (witnesses.is_empty()) continue;
    for (std::size_t x = 0; x < z->size(); ++x)
      if (k.intersects(r.row_words(x), witnesses.words())) out.insert(x, a);
  }
  return out;
}

Rel comp_bullet(const Rel& r, const Rel& s, const Rel& e) {
  const UniversePtr& z = e.source();
  require_square(e, z, "comp_bullet");
  require_square(r, z, "comp_bullet");
  require_square(s, z, "comp_bullet");
  const auto& k = kernels::active();
  const Rel s_t = converse(s);  // row x of s_t is S⁽⁰⁾[x]
  const Rel e_t = converse(e);  // row y of e_t is E⁽⁰⁾[y]
  Rel out(z, z);
  StateSet witnesses(z);
  for (std::size_t x = 0; x < z->size(); ++x) {
    // W_x = {y | E⁽⁰⁾[y] ⊆ S⁽⁰⁾[x]}
    witnesses = StateSet(z);
    for (std::size_t y = 0; y < z->size(); ++y)
      if (k.is_subset(e_t.row_words(y), s_t.row_words(x))) witnesses.insert(y);
    if (witnesses.is_empty()) continue;
    for (std::size_t a = 0; a < z->size(); ++a)
      if (k.intersects(r.row_words(a), witnesses.words())) out.insert(a, x);
  }
  return out;
}

bool is_reflexive(const Rel& r) {
  if (!r.is_square()) return false;
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (!r.contains(a, a)) return false;
  return true;
}

}  // namespace gbm
