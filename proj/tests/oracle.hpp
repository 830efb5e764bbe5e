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

// Brute-force reference implementations on std::set, independent of the
// packed-bitset code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbm/logic/formula.hpp"
#include "gbm/relcore/ops.hpp"

namespace oracle {

using Set = std::set<int>;
using Pairs = std::set<std::pair<int, int>>;

inline Set full(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline Set to_set(const gbm::StateSet& s) {
  Set out;
  for (std::size_t i : s.indices()) out.insert(static_cast<int>(i));
  return out;
}

inline Pairs to_pairs(const gbm::Rel& r) {
  Pairs out;
  for (auto [a, b] : r.pairs()) out.emplace(static_cast<int>(a), static_cast<int>(b));
  return out;
}

inline gbm::StateSet from_set(const gbm::UniversePtr& u, const Set& s) {
  gbm::StateSet out(u);
  for (int i : s) out.insert(static_cast<std::size_t>(i));
  return out;
}

inline gbm::Rel from_pairs(const gbm::UniversePtr& u, const Pairs& p) {
  gbm::Rel out(u, u);
  for (auto [a, b] : p) out.insert(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return out;
}

inline bool has(const Pairs& r, int a, int b) { return r.count({a, b}) > 0; }

inline Set image(int n, const Pairs& r, const Set& s) {
  Set out;
  for (int t = 0; t < n; ++t)
    for (int a : s)
      if (has(r, a, t)) out.insert(t);
  return out;
}

inline Set preimage(int n, const Pairs& r, const Set& t) {
  Set out;
  for (int s = 0; s < n; ++s)
    for (int b : t)
      if (has(r, s, b)) out.insert(s);
  return out;
}

inline Set box_sem(int n, const Pairs& r, const Set& w) {
  Set out;
  for (int s = 0; s < n; ++s) {
    bool all = true;
    for (int t = 0; t < n; ++t)
      if (has(r, s, t) && !w.count(t)) all = false;
    if (all) out.insert(s);
  }
  return out;
}

// {v | ∀u ∈ U. u R v} and {u | ∀v ∈ V. u R v}; `neg` flips to ¬ u R v.
inline Set round1(int n, const Pairs& r, const Set& u, bool neg = false) {
  Set out;
  for (int v = 0; v < n; ++v) {
    bool all = true;
    for (int a : u)
      if (has(r, a, v) == neg) all = false;
    if (all) out.insert(v);
  }
  return out;
}

inline Set round0(int n, const Pairs& r, const Set& v, bool neg = false) {
  Set out;
  for (int u = 0; u < n; ++u) {
    bool all = true;
    for (int b : v)
      if (has(r, u, b) == neg) all = false;
    if (all) out.insert(u);
  }
  return out;
}

inline Set square1(int n, const Pairs& r, const Set& u) { return round1(n, r, u, true); }
inline Set square0(int n, const Pairs& r, const Set& v) { return round0(n, r, v, true); }

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// x (R ∘_E S) a iff ∃b. x R b and {v | b E v} ⊆ {u | u S a}
inline Pairs circ(int n, const Pairs& r, const Pairs& s, const Pairs& e) {
  Pairs out;
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!has(r, x, b)) continue;
        bool inc = true;
        for (int v = 0; v < n; ++v)
          if (has(e, b, v) && !has(s, v, a)) inc = false;
        if (inc) {
          out.emplace(x, a);
          break;
        }
      }
  return out;
}

// a (R •_E S) x iff ∃y. a R y and {u | u E y} ⊆ {u | u S x}
inline Pairs bullet(int n, const Pairs& r, const Pairs& s, const Pairs& e) {
  Pairs out;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!has(r, a, y)) continue;
        bool inc = true;
        for (int u = 0; u < n; ++u)
          if (has(e, u, y) && !has(s, u, x)) inc = false;
        if (inc) {
          out.emplace(a, x);
          break;
        }
      }
  return out;
}

inline Pairs compose(int n, const Pairs& r, const Pairs& s) {
  Pairs out;
  for (auto [a, b] : r)
    for (int c = 0; c < n; ++c)
      if (has(s, b, c)) out.emplace(a, c);
  (void)n;
  return out;
}

inline Pairs converse(const Pairs& r) {
  Pairs out;
  for (auto [a, b] : r) out.emplace(b, a);
  return out;
}

inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out;
  for (int m = 0; m < (1 << n); ++m) {
    Set s;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.insert(i);
    out.push_back(s);
  }
  return out;
}

// Galois-stable extents of the polarity (Z, Z, Eᶜ): sets B with B^[10] = B.
inline std::set<Set> stable_extents(int n, const Pairs& e) {
  std::set<Set> out;
  for (const Set& b : all_subsets(n))
    if (square0(n, e, square1(n, e, b)) == b) out.insert(b);
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int k) { return std::uniform_int_distribution<int>(0, k - 1)(gen); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen); }
  Pairs relation(int n, double p) {
    Pairs r;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (unit() < p) r.emplace(a, b);
    return r;
  }
  Pairs reflexive(int n, double p) {
    Pairs r = relation(n, p);
    for (int a = 0; a < n; ++a) r.emplace(a, a);
    return r;
  }
  Set subset(int n, double p = 0.5) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (unit() < p) s.insert(i);
    return s;
  }
};

using gbm::logic::Formula;
using gbm::logic::FormulaPtr;
using gbm::logic::Op;

inline FormulaPtr random_formula(Rng& rng, int depth, const std::vector<std::string>& props,
                                 bool black = true) {
  if (depth == 0 || rng.below(4) == 0) {
    int k = rng.below(static_cast<int>(props.size()) + 2);
    if (k == 0) return Formula::bot();
    if (k == 1) return Formula::top();
    return Formula::prop(props[k - 2]);
  }
  int pick = rng.below(black ? 6 : 4);
  switch (pick) {
    case 0: return Formula::conj(random_formula(rng, depth - 1, props, black),
                                 random_formula(rng, depth - 1, props, black));
    case 1: return Formula::disj(random_formula(rng, depth - 1, props, black),
                                 random_formula(rng, depth - 1, props, black));
    case 2: return Formula::box(random_formula(rng, depth - 1, props, black));
    case 3: return Formula::dia(random_formula(rng, depth - 1, props, black));
    case 4: return Formula::blackbox(random_formula(rng, depth - 1, props, black));
    default: return Formula::blackdia(random_formula(rng, depth - 1, props, black));
  }
}

// Two-sided forcing, clause by clause, with every quantifier spelled out.
struct GraphModel {
  int n;
  Pairs e, rbox, rdia;
  std::map<std::string, Set> val;
};

struct Forcing {
  Set forced, refuted;
};

inline Forcing force(const GraphModel& m, const FormulaPtr& f) {
  auto no_pred_in = [&](const Set& s) {
    Set out;
    for (int z = 0; z < m.n; ++z) {
      bool ok = true;
      for (int w = 0; w < m.n; ++w)
        if (has(m.e, w, z) && s.count(w)) ok = false;
      if (ok) out.insert(z);
    }
    return out;
  };
  auto no_succ_in = [&](const Pairs& r, const Set& s) {
    Set out;
    for (int z = 0; z < m.n; ++z) {
      bool ok = true;
      for (int w = 0; w < m.n; ++w)
        if (has(r, z, w) && s.count(w)) ok = false;
      if (ok) out.insert(z);
    }
    return out;
  };
  Forcing r;
  switch (f->op()) {
    case Op::Bot: r.refuted = full(m.n); break;
    case Op::Top: r.forced = full(m.n); break;
    case Op::Prop:
      r.forced = m.val.at(f->name());
      r.refuted = no_pred_in(r.forced);
      break;
    case Op::And: {
      auto a = force(m, f->left()), b = force(m, f->right());
      std::set_intersection(a.forced.begin(), a.forced.end(), b.forced.begin(), b.forced.end(),
                            std::inserter(r.forced, r.forced.end()));
      r.refuted = no_pred_in(r.forced);
      break;
    }
    case Op::Or: {
      auto a = force(m, f->left()), b = force(m, f->right());
      std::set_intersection(a.refuted.begin(), a.refuted.end(), b.refuted.begin(), b.refuted.end(),
                            std::inserter(r.refuted, r.refuted.end()));
      r.forced = no_succ_in(m.e, r.refuted);
      break;
    }
    case Op::Box:
    case Op::BlackBox: {
      Pairs rel = f->op() == Op::Box ? m.rbox : converse(m.rdia);
      r.forced = no_succ_in(rel, force(m, f->child()).refuted);
      r.refuted = no_pred_in(r.forced);
      break;
    }
    case Op::Dia:
    case Op::BlackDia: {
      Pairs rel = f->op() == Op::Dia ? m.rdia : converse(m.rbox);
      r.refuted = no_succ_in(rel, force(m, f->child()).forced);
      r.forced = no_succ_in(m.e, r.refuted);
      break;
    }
  }
  return r;
}

// Textbook Kripke satisfaction; the black modalities look backwards.
inline bool kripke(const GraphModel& m, int z, const FormulaPtr& f) {
  switch (f->op()) {
    case Op::Bot: return false;
    case Op::Top: return true;
    case Op::Prop: return m.val.at(f->name()).count(z) > 0;
    case Op::And: return kripke(m, z, f->left()) && kripke(m, z, f->right());
    case Op::Or: return kripke(m, z, f->left()) || kripke(m, z, f->right());
    case Op::Box:
      for (int w = 0; w < m.n; ++w)
        if (has(m.rbox, z, w) && !kripke(m, w, f->child())) return false;
      return true;
    case Op::Dia:
      for (int w = 0; w < m.n; ++w)
        if (has(m.rdia, z, w) && kripke(m, w, f->child())) return true;
      return false;
    case Op::BlackBox:
      for (int w = 0; w < m.n; ++w)
        if (has(m.rdia, w, z) && !kripke(m, w, f->child())) return false;
      return true;
    case Op::BlackDia:
      for (int w = 0; w < m.n; ++w)
        if (has(m.rbox, w, z) && kripke(m, w, f->child())) return true;
      return false;
  }
  return false;
}

}  // namespace oracle
