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

#include "gbm/algebra/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gbm/error.hpp"

namespace gbm::algebra {

FiniteLattice::FiniteLattice(Rel order) : order_(std::move(order)) {
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    if (!leq(a, a)) throw InvalidStructure("order is not reflexive at " + label(a));
    for (Elem b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw InvalidStructure("order is not antisymmetric: " + label(a) + " and " + label(b));
      if (leq(a, b) && !order_.row(b).subset_of(order_.row(a)))
        throw InvalidStructure("order is not transitive at " + label(a) + " <= " + label(b));
    }
  }
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      StateSet lower = down_set(a) & down_set(b);
      StateSet upper = up_set(a) & up_set(b);
      std::optional<Elem> glb, lub;
      for (Elem c : lower.indices())
        if (lower.subset_of(down_set(c))) glb = c;
      for (Elem c : upper.indices())
        if (upper.subset_of(up_set(c))) lub = c;
      if (!glb) throw InvalidStructure("not a lattice: " + label(a) + " and " + label(b) + " have no meet");
      if (!lub) throw InvalidStructure("not a lattice: " + label(a) + " and " + label(b) + " have no join");
      meet_[a * n + b] = *glb;
      join_[a * n + b] = *lub;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (up_set(a).count() == 1) top_ = a;
    if (down_set(a).count() == 1) bottom_ = a;
  }
  if (n > 0 && (down_set(top_).count() != n || up_set(bottom_).count() != n))
    throw InvalidStructure("not a lattice: no top or no bottom");
}

FiniteLattice FiniteLattice::from_order(const Rel& leq) {
  if (!leq.is_square()) throw UniverseMismatch("order must be a relation on one carrier");
  return FiniteLattice(leq);
}

FiniteLattice FiniteLattice::generated_by(UniversePtr carrier,
                                          const std::vector<std::pair<Elem, Elem>>& pairs) {
  Rel r = Rel::from_pairs(carrier, carrier, pairs) | Rel::identity(carrier);
  const std::size_t n = carrier->size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r.contains(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r.contains(k, j)) r.insert(i, j);
  return FiniteLattice(std::move(r));
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
  UniversePtr u = Universe::indexed(n);
  Rel r(u, u);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) r.insert(a, b);
  return FiniteLattice(std::move(r));
}

Normality check_normality(const FiniteLattice& l, const Table& box, const Table& dia) {
  Normality out;
  const std::size_t n = l.size();
  if (box.size() != n || dia.size() != n) throw InvalidStructure("modal table size does not match the lattice");
  for (Elem v : box)
    if (v >= n) throw InvalidStructure("box table value out of range");
  for (Elem v : dia)
    if (v >= n) throw InvalidStructure("dia table value out of range");
  out.box_top = box[l.top()] == l.top();
  out.dia_bot = dia[l.bottom()] == l.bottom();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (box[l.meet(a, b)] != l.meet(box[a], box[b])) out.box_meet = false;
      if (dia[l.join(a, b)] != l.join(dia[a], dia[b])) out.dia_join = false;
    }
  }
  return out;
}

ModalAlgebra::ModalAlgebra(FiniteLattice lattice, Table box, Table dia)
    : lattice_(std::move(lattice)), box_(std::move(box)), dia_(std::move(dia)) {
  const auto& l = lattice_;
  const std::size_t n = l.size();
  blackdia_.assign(n, l.bottom());
  blackbox_.assign(n, l.top());
  for (Elem a = 0; a < n; ++a) {
    // ◆a = ⋀{b | a ≤ □b}, ■a = ⋁{b | ◇b ≤ a}
    Elem lo = l.top(), hi = l.bottom();
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, box_[b])) lo = l.meet(lo, b);
      if (l.leq(dia_[b], a)) hi = l.join(hi, b);
    }
    blackdia_[a] = lo;
    blackbox_[a] = hi;
  }
}

ModalAlgebra ModalAlgebra::make(FiniteLattice lattice, Table box, Table dia) {
  Normality n = check_normality(lattice, box, dia);
  if (!n.box_top) throw InvalidStructure("box does not preserve top");
  if (!n.box_meet) throw InvalidStructure("box does not preserve binary meets");
  if (!n.dia_bot) throw InvalidStructure("dia does not preserve bottom");
  if (!n.dia_join) throw InvalidStructure("dia does not preserve binary joins");
  return ModalAlgebra(std::move(lattice), std::move(box), std::move(dia));
}

ModalAlgebra ModalAlgebra::identity(FiniteLattice lattice) {
  Table id(lattice.size());
  std::iota(id.begin(), id.end(), Elem{0});
  return make(std::move(lattice), id, id);
}

bool is_filter(const FiniteLattice& l, const StateSet& f) {
  if (f.is_empty()) return false;
  for (Elem a : f.indices()) {
    if (!l.up_set(a).subset_of(f)) return false;
    for (Elem b : f.indices())
      if (!f.contains(l.meet(a, b))) return false;
  }
  return true;
}

bool is_ideal(const FiniteLattice& l, const StateSet& j) {
  if (j.is_empty()) return false;
  for (Elem a : j.indices()) {
    if (!l.down_set(a).subset_of(j)) return false;
    for (Elem b : j.indices())
      if (!j.contains(l.join(a, b))) return false;
  }
  return true;
}

namespace {

void sort_shortlex(std::vector<StateSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const StateSet& a, const StateSet& b) { return a.shortlex_less(b); });
}

}  // namespace

// A nonempty filter of a finite lattice is the up-set of its meet, and dually.
std::vector<StateSet> filters(const FiniteLattice& l) {
  std::vector<StateSet> out;
  for (Elem a = 0; a < l.size(); ++a) out.push_back(l.up_set(a));
  sort_shortlex(out);
  return out;
}

std::vector<StateSet> ideals(const FiniteLattice& l) {
  std::vector<StateSet> out;
  for (Elem a = 0; a < l.size(); ++a) out.push_back(l.down_set(a));
  sort_shortlex(out);
  return out;
}

StateSet filter_gen(const FiniteLattice& l, const StateSet& k) {
  require_same(k.universe(), l.carrier(), "filter_gen");
  Elem m = l.top();
  for (Elem a : k.indices()) m = l.meet(m, a);
  return l.up_set(m);
}

StateSet ideal_gen(const FiniteLattice& l, const StateSet& k) {
  require_same(k.universe(), l.carrier(), "ideal_gen");
  Elem m = l.bottom();
  for (Elem a : k.indices()) m = l.join(m, a);
  return l.down_set(m);
}

StateSet box_image(const ModalAlgebra& a, const StateSet& k) {
  require_same(k.universe(), a.lattice().carrier(), "box_image");
  StateSet out(k.universe());
  for (Elem u : k.indices()) out.insert(a.box(u));
  return out;
}

StateSet dia_image(const ModalAlgebra& a, const StateSet& k) {
  require_same(k.universe(), a.lattice().carrier(), "dia_image");
  StateSet out(k.universe());
  for (Elem u : k.indices()) out.insert(a.dia(u));
  return out;
}

bool check_filtidl_lemma(const ModalAlgebra& a) {
  const auto& l = a.lattice();
  const auto fs = filters(l);
  const auto js = ideals(l);
  for (const auto& f : fs) {
    for (const auto& j : js) {
      StateSet bj = box_image(a, j);
      if (f.intersects(bj) != f.intersects(ideal_gen(l, bj))) return false;
      StateSet df = dia_image(a, f);
      if (j.intersects(df) != j.intersects(filter_gen(l, df))) return false;
    }
  }
  return true;
}

XLGraph build_graph_XL(const FiniteLattice& l, XLMode mode) {
  std::vector<StateSet> fs = filters(l), js = ideals(l);
  if (mode == XLMode::Loose) {
    const StateSet whole = StateSet::full(l.carrier());
    std::erase(fs, whole);
    std::erase(js, whole);
    fs.insert(fs.begin(), StateSet(l.carrier()));
    js.insert(js.begin(), StateSet(l.carrier()));
  }
  std::vector<std::pair<StateSet, StateSet>> states;
  for (const auto& f : fs)
    for (const auto& j : js)
      if (!f.intersects(j)) states.emplace_back(f, j);
  if (states.empty()) throw InvalidStructure("lattice has no disjoint filter-ideal pairs");
  std::vector<std::string> labels;
  for (std::size_t z = 0; z < states.size(); ++z) labels.push_back("s" + std::to_string(z));
  UniversePtr u = Universe::make(std::move(labels));
  Rel e(u, u);
  for (std::size_t z = 0; z < states.size(); ++z)
    for (std::size_t w = 0; w < states.size(); ++w)
      if (!states[z].first.intersects(states[w].second)) e.insert(z, w);
  return XLGraph{std::move(states), std::move(u), std::move(e)};
}

FAFrame build_frame_FA(const ModalAlgebra& a, XLMode mode, frames::Check check) {
  XLGraph g = build_graph_XL(a.lattice(), mode);
  const std::size_t n = g.states.size();
  Rel rbox(g.universe, g.universe), rdia(g.universe, g.universe);
  std::vector<StateSet> box_j, dia_f;
  for (const auto& [f, j] : g.states) {
    box_j.push_back(box_image(a, j));
    dia_f.push_back(dia_image(a, f));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!g.states[x].first.intersects(box_j[y])) rbox.insert(x, y);
      if (!g.states[x].second.intersects(dia_f[y])) rdia.insert(x, y);
    }
  }
  frames::GraphFrame frame = frames::GraphFrame::make(g.E, std::move(rbox), std::move(rdia), check);
  return FAFrame{std::move(g), std::move(frame)};
}

FiniteLattice lattice_of(const fca::ConceptLattice& concepts) {
  UniversePtr u = Universe::indexed(concepts.size());
  Rel r(u, u);
  for (std::size_t c = 0; c < concepts.size(); ++c)
    for (std::size_t d = 0; d < concepts.size(); ++d)
      if (concepts.leq(c, d)) r.insert(c, d);
  return FiniteLattice::from_order(r);
}

ModalAlgebra modal_algebra_of(const frames::ComplexAlgebra& ca) {
  const auto& lat = ca.lattice();
  Table box(lat.size()), dia(lat.size());
  for (std::size_t c = 0; c < lat.size(); ++c) {
    auto b = lat.find_extent(ca.box(lat[c]).extent);
    auto d = lat.find_extent(ca.dia(lat[c]).extent);
    if (!b || !d) throw InvalidStructure("modal operator leaves the concept lattice");
    box[c] = *b;
    dia[c] = *d;
  }
  return ModalAlgebra::make(lattice_of(lat), std::move(box), std::move(dia));
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b,
            std::function<bool(const std::vector<Elem>&)> accept)
      : a_(a), b_(b), accept_(std::move(accept)), map_(a.size()), used_(b.size(), false) {
    for (Elem x = 0; x < a.size(); ++x) sig_a_.push_back({a.down_set(x).count(), a.up_set(x).count()});
    for (Elem x = 0; x < b.size(); ++x) sig_b_.push_back({b.down_set(x).count(), b.up_set(x).count()});
  }

  std::optional<std::vector<Elem>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(Elem x) {
    if (x == a_.size()) return accept_(map_);
    for (Elem y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      bool ok = true;
      for (Elem p = 0; p < x && ok; ++p)
        ok = a_.leq(p, x) == b_.leq(map_[p], y) && a_.leq(x, p) == b_.leq(y, map_[p]);
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::function<bool(const std::vector<Elem>&)> accept_;
  std::vector<std::pair<std::size_t, std::size_t>> sig_a_, sig_b_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return IsoSearch(a, b, [](const std::vector<Elem>&) { return true; }).run();
}

std::optional<std::vector<Elem>> find_isomorphism(const ModalAlgebra& a, const ModalAlgebra& b) {
  return IsoSearch(a.lattice(), b.lattice(),
                   [&](const std::vector<Elem>& f) {
                     for (Elem x = 0; x < a.size(); ++x)
                       if (f[a.box(x)] != b.box(f[x]) || f[a.dia(x)] != b.dia(f[x])) return false;
                     return true;
                   })
      .run();
}

bool check_canonical_extension(const FiniteLattice& l, XLMode mode) {
  XLGraph g = build_graph_XL(l, mode);
  auto concepts = fca::enumerate_concepts(frames::polarity_of(g.E), fca::kDefaultConceptCap,
                                          fca::Enumeration::NextClosure);
  return find_isomorphism(lattice_of(concepts), l).has_value();
}

bool check_complex_algebra_iso(const ModalAlgebra& a, XLMode mode) {
  FAFrame fa = build_frame_FA(a, mode, frames::Check::Unchecked);
  frames::ComplexAlgebra ca(fa.frame);
  return find_isomorphism(modal_algebra_of(ca), a).has_value();
}

Elem evaluate(const ModalAlgebra& a, const logic::Formula& f, const Assignment& v) {
  using logic::Op;
  const auto& l = a.lattice();
  switch (f.op()) {
    case Op::Bot: return l.bottom();
    case Op::Top: return l.top();
    case Op::Prop: {
      auto it = v.find(f.name());
      if (it == v.end()) throw Error("unbound proposition '" + f.name() + "'");
      return it->second;
    }
    case Op::And: return l.meet(evaluate(a, *f.left(), v), evaluate(a, *f.right(), v));
    case Op::Or: return l.join(evaluate(a, *f.left(), v), evaluate(a, *f.right(), v));
    case Op::Box: return a.box(evaluate(a, *f.child(), v));
    case Op::Dia: return a.dia(evaluate(a, *f.child(), v));
    case Op::BlackBox: return a.blackbox(evaluate(a, *f.child(), v));
    case Op::BlackDia: return a.blackdia(evaluate(a, *f.child(), v));
  }
  throw Error("unknown formula node");
}

AlgebraValidity algebra_validates(const ModalAlgebra& a, const logic::Sequent& s, std::size_t cap) {
  auto names = logic::props_of(s);
  std::vector<std::string> props(names.begin(), names.end());
  const std::size_t n = a.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (total > cap / n) throw CapExceeded("assignment count exceeds cap of " + std::to_string(cap));
    total *= n;
  }
  if (total > cap) throw CapExceeded("assignment count exceeds cap of " + std::to_string(cap));

  AlgebraValidity out;
  Assignment v;
  std::vector<Elem> idx(props.size(), 0);
  for (const auto& p : props) v[p] = 0;
  while (true) {
    ++out.assignments;
    if (!a.lattice().leq(evaluate(a, *s.lhs, v), evaluate(a, *s.rhs, v))) {
      out.valid = false;
      out.counterexample = v;
      return out;
    }
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < n) {
        v[props[i]] = idx[i];
        break;
      }
      idx[i] = 0;
      v[props[i]] = 0;
    }
    if (i == idx.size()) return out;
  }
}

std::vector<FiniteLattice> all_lattices(std::size_t n) {
  std::vector<FiniteLattice> out;
  if (n == 0) return out;
  if (n <= 2) {
    out.push_back(FiniteLattice::chain(n));
    return out;
  }
  // Bottom 0, top n-1; the middle k elements carry a strict order that is
  // compatible with index order, so every poset is reached at least once.
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);

  std::vector<std::size_t> perm(k);
  std::set<std::vector<bool>> seen;
  UniversePtr u = Universe::indexed(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<bool> lt(k * k, false);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) lt[slots[s].first * k + slots[s].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < k && transitive; ++a)
      for (std::size_t b = 0; b < k && transitive; ++b)
        for (std::size_t c = 0; c < k && transitive; ++c)
          if (lt[a * k + b] && lt[b * k + c] && !lt[a * k + c]) transitive = false;
    if (!transitive) continue;

    std::vector<bool> canon;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<bool> code(k * k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) code[perm[a] * k + perm[b]] = lt[a * k + b];
      if (canon.empty() || code < canon) canon = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (k == 0) canon.clear();
    if (!seen.insert(canon).second) continue;

    Rel r = Rel::identity(u);
    for (std::size_t x = 0; x < n; ++x) {
      r.insert(0, x);
      r.insert(x, n - 1);
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (lt[a * k + b]) r.insert(a + 1, b + 1);
    try {
      out.push_back(FiniteLattice::from_order(r));
    } catch (const InvalidStructure&) {
    }
  }
  return out;
}

namespace {

template <typename Accept>
std::vector<Table> all_tables(std::size_t n, Accept accept) {
  std::vector<Table> out;
  Table f(n, 0);
  while (true) {
    if (accept(f)) out.push_back(f);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == n) return out;
  }
}

}  // namespace

std::vector<Table> all_normal_boxes(const FiniteLattice& l) {
  return all_tables(l.size(), [&](const Table& f) {
    if (f[l.top()] != l.top()) return false;
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = a + 1; b < l.size(); ++b)
        if (f[l.meet(a, b)] != l.meet(f[a], f[b])) return false;
    return true;
  });
}

std::vector<Table> all_normal_dias(const FiniteLattice& l) {
  return all_tables(l.size(), [&](const Table& f) {
    if (f[l.bottom()] != l.bottom()) return false;
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = a + 1; b < l.size(); ++b)
        if (f[l.join(a, b)] != l.join(f[a], f[b])) return false;
    return true;
  });
}

ModalAlgebra random_modal_algebra(const FiniteLattice& l, std::mt19937_64& rng) {
  const auto boxes = all_normal_boxes(l);
  const auto dias = all_normal_dias(l);
  std::uniform_int_distribution<std::size_t> pick_box(0, boxes.size() - 1), pick_dia(0, dias.size() - 1);
  return ModalAlgebra::make(l, boxes[pick_box(rng)], dias[pick_dia(rng)]);
}

}  // namespace gbm::algebra
