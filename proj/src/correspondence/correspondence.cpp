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

#include "gbm/correspondence/correspondence.hpp"

#include <cctype>
#include <string>

#include "gbm/error.hpp"

namespace gbm::correspondence {

namespace {

struct AxiomInfo {
  AxiomId id;
  std::string_view name;
  std::string_view sequent;
  std::string_view condition;
};

constexpr std::array<AxiomInfo, 6> kInfo = {{
    {AxiomId::T_box, "T_box", "[]p |- p", "E <= Rbox"},
    {AxiomId::T_dia, "T_dia", "p |- <>p", "E <= Rblacksq"},
    {AxiomId::Four_box, "Four_box", "[]p |- [][]p", "Rbox ;bullet_E Rbox <= Rbox"},
    {AxiomId::Four_dia, "Four_dia", "<><>p |- <>p", "Rdia ;circ_E Rdia <= Rdia"},
    {AxiomId::Tc_box, "Tc_box", "p |- []p", "Rbox <= E"},
    {AxiomId::Tc_dia, "Tc_dia", "<>p |- p", "Rblacksq <= E"},
}};

const AxiomInfo& info(AxiomId ax) { return kInfo[static_cast<std::size_t>(ax)]; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view axiom_name(AxiomId ax) { return info(ax).name; }
std::string_view condition_text(AxiomId ax) { return info(ax).condition; }
logic::Sequent axiom_sequent(AxiomId ax) { return logic::parse_sequent(info(ax).sequent); }

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  const std::string key = lower(name);
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (key == lower(kInfo[i].name) || key == std::to_string(i + 1)) return kInfo[i].id;
    std::string bare = lower(kInfo[i].name);
    bare.erase(bare.find('_'), 1);
    if (key == bare) return kInfo[i].id;
  }
  return std::nullopt;
}

bool is_E_reflexive(const Rel& e, const Rel& r) { return e.subset_of(r); }
bool is_sub_E(const Rel& e, const Rel& r) { return r.subset_of(e); }
bool is_circ_transitive(const Rel& e, const Rel& r) { return comp_circ(r, r, e).subset_of(r); }
bool is_bullet_transitive(const Rel& e, const Rel& r) { return comp_bullet(r, r, e).subset_of(r); }

bool condition_of(AxiomId ax, const GraphFrame& f) {
  switch (ax) {
    case AxiomId::T_box: return is_E_reflexive(f.E(), f.Rbox());
    case AxiomId::T_dia: return is_E_reflexive(f.E(), f.Rblacksq());
    case AxiomId::Four_box: return is_bullet_transitive(f.E(), f.Rbox());
    case AxiomId::Four_dia: return is_circ_transitive(f.E(), f.Rdia());
    case AxiomId::Tc_box: return is_sub_E(f.E(), f.Rbox());
    case AxiomId::Tc_dia: return is_sub_E(f.E(), f.Rblacksq());
  }
  throw Error("unknown axiom");
}

Verdict check_correspondence(AxiomId ax, const AlgebraPtr& algebra, std::size_t cap) {
  Verdict v{ax, false, condition_of(ax, algebra->frame()), {}};
  v.detail = semantics::frame_valid(algebra, axiom_sequent(ax), cap);
  v.valid = v.detail.valid;
  return v;
}

std::optional<TBoxWitness> t_box_witness(const ComplexAlgebra& ca) {
  const auto& f = ca.frame();
  Rel missing = f.E() - f.Rbox();
  auto pairs = missing.pairs();
  if (pairs.empty()) return std::nullopt;
  auto [z, y] = pairs.front();
  StateSet ext = square0(f.E(), StateSet::of(f.universe(), {y}));
  return TBoxWitness{z, y, {{"p", ca.close_extent(ext)}}};
}

Rel repair_box_compatible(const Rel& e, const Rel& candidate) {
  const std::size_t n = e.rows();
  Rel c = complement(candidate);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y) {
      StateSet col = c.column(y);
      StateSet closed = square0(e, square1(e, col));
      if (closed != col) {
        for (std::size_t a : closed.indices()) c.insert(a, y);
        changed = true;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      StateSet row = c.row(b);
      StateSet closed = square1(e, square0(e, row));
      if (closed != row) {
        c.set_row(b, closed);
        changed = true;
      }
    }
  }
  return complement(c);
}

Rel FrameGenerator::random_relation(const UniversePtr& u, double density) {
  Rel r(u, u);
  for (std::size_t a = 0; a < u->size(); ++a)
    for (std::size_t b = 0; b < u->size(); ++b)
      if (uniform() < density) r.insert(a, b);
  return r;
}

Rel FrameGenerator::random_reflexive(const UniversePtr& u, double density) {
  return random_relation(u, density) | Rel::identity(u);
}

Rel FrameGenerator::random_box_compatible(const Rel& e) {
  const auto& u = e.source();
  const Rel ec = complement(e);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double mode = uniform();
    Rel candidate(u, u);
    if (mode < 0.15) return e;
    if (mode < 0.45) {
      // Complement inside Eᶜ: the result contains E.
      candidate = complement(ec & random_relation(u, uniform()));
    } else if (mode < 0.75) {
      // Complement covering Eᶜ: the result is inside E.
      candidate = complement(ec | random_relation(u, uniform() * 0.6));
    } else {
      candidate = random_relation(u, uniform());
    }
    Rel r = repair_box_compatible(e, candidate);
    if (r.count() > 0 || attempt == 7) return r;
  }
  return e;
}

Rel FrameGenerator::random_dia_compatible(const Rel& e) {
  if (uniform() < 0.15) return converse(e);
  return converse(random_box_compatible(e));
}

GraphFrame FrameGenerator::frame(std::size_t n) {
  UniversePtr u = Universe::indexed(n);
  Rel e = random_reflexive(u, uniform() * 0.7);
  Rel rbox = random_box_compatible(e);
  Rel rdia = random_dia_compatible(e);
  return GraphFrame::make(std::move(e), std::move(rbox), std::move(rdia));
}

GraphFrame FrameGenerator::frame(std::size_t lo, std::size_t hi) {
  return frame(std::uniform_int_distribution<std::size_t>(lo, hi)(rng_));
}

}  // namespace gbm::correspondence
