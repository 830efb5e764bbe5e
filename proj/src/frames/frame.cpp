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

#include "gbm/frames/frame.hpp"

#include "gbm/error.hpp"

namespace gbm::frames {

namespace {

// B^[10] and Y^[01] over the graph E.
StateSet close10(const Rel& e, const StateSet& b) { return square0(e, square1(e, b)); }
StateSet close01(const Rel& e, const StateSet& y) { return square1(e, square0(e, y)); }

StateSet singleton(const UniversePtr& u, std::size_t i) { return StateSet::of(u, {i}); }

void require_square_over(const Rel& e, const Rel& r, const char* what) {
  if (!e.is_square()) throw UniverseMismatch("E must be a relation on one universe");
  require_same(e.source(), r.source(), what);
  require_same(e.target(), r.target(), what);
}

}  // namespace

GraphFrame GraphFrame::make(Rel e, Rel rbox, Rel rdia, Check check) {
  require_square_over(e, rbox, "Rbox");
  require_square_over(e, rdia, "Rdia");
  for (std::size_t z = 0; z < e.rows(); ++z)
    if (!e.contains(z, z))
      throw InvalidStructure("E not reflexive at state " + e.source()->label(z));
  if (check == Check::Enforce) {
    CompatReport report = check_e_compat(e, rbox, rdia);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      throw InvalidStructure(v.relation + " is not E-compatible: " + v.condition + " fails at state " +
                             e.source()->label(v.state));
    }
  }
  return GraphFrame(std::move(e), std::move(rbox), std::move(rdia));
}

fca::FormalContext polarity_of(const Rel& e) { return fca::FormalContext(complement(e)); }
fca::FormalContext polarity_of(const GraphFrame& frame) { return polarity_of(frame.E()); }

std::vector<CompatViolation> box_violations(const Rel& e, const Rel& r, const std::string& name) {
  require_square_over(e, r, name.c_str());
  std::vector<CompatViolation> out;
  const auto& u = e.source();
  for (std::size_t y = 0; y < e.rows(); ++y) {
    StateSet ext = square0(r, singleton(u, y));
    if (!close10(e, ext).subset_of(ext)) out.push_back({name, "(R^[0][y])^[10] <= R^[0][y]", y});
  }
  for (std::size_t b = 0; b < e.rows(); ++b) {
    StateSet in = square1(r, singleton(u, b));
    if (!close01(e, in).subset_of(in)) out.push_back({name, "(R^[1][b])^[01] <= R^[1][b]", b});
  }
  return out;
}

std::vector<CompatViolation> dia_violations(const Rel& e, const Rel& r, const std::string& name) {
  require_square_over(e, r, name.c_str());
  std::vector<CompatViolation> out;
  const auto& u = e.source();
  for (std::size_t b = 0; b < e.rows(); ++b) {
    StateSet in = square0(r, singleton(u, b));
    if (!close01(e, in).subset_of(in)) out.push_back({name, "(R^[0][b])^[01] <= R^[0][b]", b});
  }
  for (std::size_t y = 0; y < e.rows(); ++y) {
    StateSet ext = square1(r, singleton(u, y));
    if (!close10(e, ext).subset_of(ext)) out.push_back({name, "(R^[1][y])^[10] <= R^[1][y]", y});
  }
  return out;
}

bool is_box_compatible(const Rel& e, const Rel& r) { return box_violations(e, r).empty(); }
bool is_dia_compatible(const Rel& e, const Rel& r) { return dia_violations(e, r).empty(); }

CompatReport check_e_compat(const Rel& e, const Rel& rbox, const Rel& rdia) {
  CompatReport report;
  for (std::size_t z = 0; z < e.rows(); ++z)
    if (!e.contains(z, z)) report.non_reflexive.push_back(z);
  report.violations = box_violations(e, rbox, "Rbox");
  auto more = dia_violations(e, rdia, "Rdia");
  report.violations.insert(report.violations.end(), more.begin(), more.end());
  return report;
}

CompatReport check_e_compat(const GraphFrame& frame) {
  return check_e_compat(frame.E(), frame.Rbox(), frame.Rdia());
}

CompatEquivalents check_e_compat_equivalents(const Rel& e, const Rel& r) {
  require_square_over(e, r, "R");
  const std::size_t n = e.rows();
  if (n > kEquivalentsMaxStates)
    throw CapExceeded("set-level compatibility check is limited to " +
                      std::to_string(kEquivalentsMaxStates) + " states");
  const auto& u = e.source();
  CompatEquivalents out{{true, true, true}, {true, true, true}};
  for (std::size_t z = 0; z < n; ++z) {
    StateSet ext = square0(r, singleton(u, z));
    if (!close10(e, ext).subset_of(ext)) out.item1[0] = false;
    StateSet in = square1(r, singleton(u, z));
    if (!close01(e, in).subset_of(in)) out.item2[0] = false;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    StateSet s = StateSet::from_words(u, {mask});
    StateSet ext = square0(r, s);
    if (!close10(e, ext).subset_of(ext)) out.item1[1] = false;
    if (square1(r, s) != square1(r, close10(e, s))) out.item1[2] = false;
    StateSet in = square1(r, s);
    if (!close01(e, in).subset_of(in)) out.item2[1] = false;
    if (square0(r, s) != square0(r, close01(e, s))) out.item2[2] = false;
  }
  return out;
}

ComplexAlgebra::ComplexAlgebra(GraphFrame frame, std::size_t cap)
    : frame_(std::move(frame)),
      context_(polarity_of(frame_)),
      cap_(cap),
      rblackdia_(frame_.Rblackdia()),
      rblacksq_(frame_.Rblacksq()) {}

const fca::ConceptLattice& ComplexAlgebra::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_.emplace(fca::enumerate_concepts(context_, cap_)); });
  return *lattice_;
}

Concept ComplexAlgebra::box(const Concept& c) const {
  StateSet ext = square0(frame_.Rbox(), c.intent);
  StateSet in = square1(frame_.E(), ext);
  return {std::move(ext), std::move(in)};
}

Concept ComplexAlgebra::dia(const Concept& c) const {
  StateSet in = square0(frame_.Rdia(), c.extent);
  StateSet ext = square0(frame_.E(), in);
  return {std::move(ext), std::move(in)};
}

Concept ComplexAlgebra::blackbox(const Concept& c) const {
  StateSet ext = square0(rblacksq_, c.intent);
  StateSet in = square1(frame_.E(), ext);
  return {std::move(ext), std::move(in)};
}

Concept ComplexAlgebra::blackdia(const Concept& c) const {
  StateSet in = square0(rblackdia_, c.extent);
  StateSet ext = square0(frame_.E(), in);
  return {std::move(ext), std::move(in)};
}

Concept ComplexAlgebra::top() const {
  return fca::concept_from_extent(context_, StateSet::full(frame_.universe()));
}

Concept ComplexAlgebra::bottom() const {
  return fca::concept_from_intent(context_, StateSet::full(frame_.universe()));
}

bool check_adjunction(const ComplexAlgebra& ca) {
  const auto& cs = ca.lattice().concepts();
  std::vector<Concept> box, blackbox, dia, blackdia;
  for (const auto& c : cs) {
    box.push_back(ca.box(c));
    blackbox.push_back(ca.blackbox(c));
    dia.push_back(ca.dia(c));
    blackdia.push_back(ca.blackdia(c));
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      bool lhs = blackdia[i].extent.subset_of(cs[j].extent);
      bool rhs = cs[i].extent.subset_of(box[j].extent);
      if (lhs != rhs) return false;
      lhs = dia[i].extent.subset_of(cs[j].extent);
      rhs = cs[i].extent.subset_of(blackbox[j].extent);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool check_complete_preservation(const ComplexAlgebra& ca, std::size_t max_log2) {
  const auto& cs = ca.lattice().concepts();
  const std::size_t n = cs.size();
  if (n > max_log2 || n >= 63)
    throw CapExceeded("subset enumeration over " + std::to_string(n) + " concepts exceeds cap");
  const auto& u = ca.frame().universe();
  std::vector<Concept> box, dia;
  for (const auto& c : cs) {
    box.push_back(ca.box(c));
    dia.push_back(ca.dia(c));
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    StateSet meet_ext = StateSet::full(u), box_meet = StateSet::full(u);
    StateSet join_int = StateSet::full(u), dia_join = StateSet::full(u);
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1U)) continue;
      meet_ext = meet_ext & cs[i].extent;
      box_meet = box_meet & box[i].extent;
      join_int = join_int & cs[i].intent;
      dia_join = dia_join & dia[i].intent;
    }
    Concept meet = fca::concept_from_extent(ca.context(), meet_ext);
    if (ca.box(meet).extent != box_meet) return false;
    Concept join = fca::concept_from_intent(ca.context(), join_int);
    if (ca.dia(join).intent != dia_join) return false;
  }
  return true;
}

bool operators_well_defined(const ComplexAlgebra& ca) {
  auto stable = [&](const Concept& c) { return fca::concept_from_extent(ca.context(), c.extent) == c; };
  for (const auto& c : ca.lattice().concepts())
    if (!stable(ca.box(c)) || !stable(ca.dia(c)) || !stable(ca.blackbox(c)) || !stable(ca.blackdia(c)))
      return false;
  return true;
}

}  // namespace gbm::frames
