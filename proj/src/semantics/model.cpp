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

#include "gbm/semantics/model.hpp"

#include <unordered_map>

#include "gbm/error.hpp"

namespace gbm::semantics {

using logic::Formula;
using logic::Op;

Model::Model(AlgebraPtr algebra, Valuation valuation)
    : algebra_(std::move(algebra)), valuation_(std::move(valuation)) {
  for (const auto& [name, c] : valuation_) {
    require_same(c.extent.universe(), frame().universe(), "valuation");
    if (algebra_->close_extent(c.extent) != c)
      throw InvalidStructure("V(" + name + ") is not a concept of the frame");
  }
}

Model Model::from_extents(AlgebraPtr algebra, const std::map<std::string, StateSet>& extents,
                          std::vector<std::string>* unstable) {
  Valuation v;
  for (const auto& [name, b] : extents) {
    Concept c = algebra->close_extent(b);
    if (unstable && c.extent != b) unstable->push_back(name);
    v.emplace(name, std::move(c));
  }
  return Model(std::move(algebra), std::move(v));
}

const Concept& Model::value(const std::string& prop) const {
  auto it = valuation_.find(prop);
  if (it == valuation_.end()) throw Error("unbound proposition '" + prop + "'");
  return it->second;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Model& m) : m_(m), ca_(m.algebra()) {}

  const Concept& eval(const Formula& f) {
    if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
    Concept c = compute(f);
    return memo_.emplace(&f, std::move(c)).first->second;
  }

 private:
  Concept compute(const Formula& f) {
    switch (f.op()) {
      case Op::Bot: return ca_.bottom();
      case Op::Top: return ca_.top();
      case Op::Prop: return m_.value(f.name());
      case Op::And: return ca_.meet(eval(*f.left()), eval(*f.right()));
      case Op::Or: return ca_.join(eval(*f.left()), eval(*f.right()));
      case Op::Box: return ca_.box(eval(*f.child()));
      case Op::Dia: return ca_.dia(eval(*f.child()));
      case Op::BlackBox: return ca_.blackbox(eval(*f.child()));
      case Op::BlackDia: return ca_.blackdia(eval(*f.child()));
    }
    throw Error("unknown formula node");
  }

  const Model& m_;
  const ComplexAlgebra& ca_;
  std::unordered_map<const Formula*, Concept> memo_;
};

class PointwiseEvaluator {
 public:
  explicit PointwiseEvaluator(const Model& m)
      : m_(m), e_(m.frame().E()), rbox_(m.frame().Rbox()), rdia_(m.frame().Rdia()),
        rblacksq_(m.frame().Rblacksq()), rblackdia_(m.frame().Rblackdia()), n_(e_.rows()) {}

  Pointwise run(const Formula& f) {
    const auto& u = m_.frame().universe();
    Pointwise out{StateSet(u), StateSet(u)};
    switch (f.op()) {
      case Op::Top:
        out.forced = StateSet::full(u);
        out.refuted = refuted_from_forced(out.forced);
        break;
      case Op::Bot:
        out.refuted = StateSet::full(u);
        out.forced = forced_from_refuted(out.refuted);
        break;
      case Op::Prop: {
        const Concept& v = m_.value(f.name());
        out.forced = v.extent;
        out.refuted = v.intent;
        break;
      }
      case Op::And: {
        Pointwise l = run(*f.left()), r = run(*f.right());
        for (std::size_t z = 0; z < n_; ++z)
          if (l.forced.contains(z) && r.forced.contains(z)) out.forced.insert(z);
        out.refuted = refuted_from_forced(out.forced);
        break;
      }
      case Op::Or: {
        Pointwise l = run(*f.left()), r = run(*f.right());
        for (std::size_t z = 0; z < n_; ++z)
          if (l.refuted.contains(z) && r.refuted.contains(z)) out.refuted.insert(z);
        out.forced = forced_from_refuted(out.refuted);
        break;
      }
      case Op::Box:
      case Op::BlackBox: {
        const Rel& r = f.op() == Op::Box ? rbox_ : rblacksq_;
        Pointwise c = run(*f.child());
        for (std::size_t z = 0; z < n_; ++z) {
          bool ok = true;
          for (std::size_t w = 0; w < n_ && ok; ++w)
            if (r.contains(z, w) && c.refuted.contains(w)) ok = false;
          if (ok) out.forced.insert(z);
        }
        out.refuted = refuted_from_forced(out.forced);
        break;
      }
      case Op::Dia:
      case Op::BlackDia: {
        const Rel& r = f.op() == Op::Dia ? rdia_ : rblackdia_;
        Pointwise c = run(*f.child());
        for (std::size_t z = 0; z < n_; ++z) {
          bool ok = true;
          for (std::size_t w = 0; w < n_ && ok; ++w)
            if (r.contains(z, w) && c.forced.contains(w)) ok = false;
          if (ok) out.refuted.insert(z);
        }
        out.forced = forced_from_refuted(out.refuted);
        break;
      }
    }
    return out;
  }

 private:
  // z ≻ φ iff every z' with z' E z fails to force φ.
  StateSet refuted_from_forced(const StateSet& forced) const {
    StateSet out(forced.universe());
    for (std::size_t z = 0; z < n_; ++z) {
      bool ok = true;
      for (std::size_t w = 0; w < n_ && ok; ++w)
        if (e_.contains(w, z) && forced.contains(w)) ok = false;
      if (ok) out.insert(z);
    }
    return out;
  }

  // z ⊩ φ iff every z' with z E z' fails to refute φ.
  StateSet forced_from_refuted(const StateSet& refuted) const {
    StateSet out(refuted.universe());
    for (std::size_t z = 0; z < n_; ++z) {
      bool ok = true;
      for (std::size_t w = 0; w < n_ && ok; ++w)
        if (e_.contains(z, w) && refuted.contains(w)) ok = false;
      if (ok) out.insert(z);
    }
    return out;
  }

  const Model& m_;
  const Rel& e_;
  const Rel& rbox_;
  const Rel& rdia_;
  Rel rblacksq_;
  Rel rblackdia_;
  std::size_t n_;
};

std::optional<SequentWitness> counterexample(const Rel& e, const Concept& lhs, const Concept& rhs) {
  for (std::size_t z : lhs.extent.indices()) {
    StateSet hit = e.row(z) & rhs.intent;
    if (!hit.is_empty()) return SequentWitness{z, hit.indices().front()};
  }
  return std::nullopt;
}

}  // namespace

Concept Model::eval(const FormulaPtr& f) const {
  Evaluator ev(*this);
  return ev.eval(*f);
}

Pointwise pointwise(const Model& m, const FormulaPtr& f) {
  PointwiseEvaluator ev(m);
  return ev.run(*f);
}

std::optional<SequentWitness> sequent_counterexample(const Model& m, const Sequent& s) {
  Evaluator ev(m);
  const Concept& lhs = ev.eval(*s.lhs);
  const Concept& rhs = ev.eval(*s.rhs);
  return counterexample(m.frame().E(), lhs, rhs);
}

std::size_t for_each_valuation(const fca::ConceptLattice& lattice, const std::vector<std::string>& props,
                               std::size_t cap, const std::function<bool(const Valuation&)>& fn) {
  const std::size_t k = lattice.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (total > cap / k) throw CapExceeded("valuation count exceeds cap of " + std::to_string(cap));
    total *= k;
  }
  if (total > cap) throw CapExceeded("valuation count exceeds cap of " + std::to_string(cap));

  std::vector<std::size_t> idx(props.size(), 0);
  Valuation v;
  for (const auto& p : props) v.insert_or_assign(p, lattice[0]);
  std::size_t visited = 0;
  while (true) {
    ++visited;
    if (!fn(v)) return visited;
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < k) {
        v.insert_or_assign(props[i], lattice[idx[i]]);
        break;
      }
      idx[i] = 0;
      v.insert_or_assign(props[i], lattice[0]);
    }
    if (i == idx.size()) return visited;
  }
}

namespace {

template <typename Check>
ValidityResult sweep(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap, Check check) {
  auto names = logic::props_of(s);
  std::vector<std::string> props(names.begin(), names.end());
  ValidityResult result;
  result.valuations = for_each_valuation(algebra->lattice(), props, cap, [&](const Valuation& v) {
    Model m(algebra, v);
    if (auto w = check(m)) {
      result.valid = false;
      result.countermodel = v;
      result.witness = *w;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace

ValidityResult frame_valid(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap) {
  return sweep(algebra, s, cap, [&](const Model& m) { return sequent_counterexample(m, s); });
}

ValidityResult algebra_valid(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap) {
  return sweep(algebra, s, cap, [&](const Model& m) -> std::optional<SequentWitness> {
    Evaluator ev(m);
    const Concept& lhs = ev.eval(*s.lhs);
    const Concept& rhs = ev.eval(*s.rhs);
    if (lhs.extent.subset_of(rhs.extent)) return std::nullopt;
    std::size_t z = (lhs.extent - rhs.extent).indices().front();
    return SequentWitness{z, z};
  });
}

DualityResult check_duality(const AlgebraPtr& algebra, const Sequent& s, std::size_t cap) {
  return {frame_valid(algebra, s, cap).valid, algebra_valid(algebra, s, cap).valid};
}

bool check_pointwise_vs_algebraic(const Model& m, const FormulaPtr& f) {
  Concept c = m.eval(f);
  Pointwise p = pointwise(m, f);
  return c.extent == p.forced && c.intent == p.refuted;
}

}  // namespace gbm::semantics
