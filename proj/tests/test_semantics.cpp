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

#include <doctest.h>

#include "gbm/cli/examples.hpp"
#include "gbm/correspondence/correspondence.hpp"
#include "gbm/error.hpp"
#include "gbm/semantics/model.hpp"
#include "oracle.hpp"

using namespace gbm;
using namespace gbm::semantics;
using frames::Check;
using logic::parse_formula;
using logic::parse_sequent;
using oracle::Pairs;
using oracle::Set;

namespace {

Model document_model(const cli::FrameDocument& doc, std::vector<std::string>* unstable = nullptr) {
  return Model::from_extents(make_algebra(cli::to_frame(doc, Check::Unchecked)), doc.valuations, unstable);
}

oracle::GraphModel graph_model(const Model& m) {
  oracle::GraphModel g;
  g.n = static_cast<int>(m.frame().size());
  g.e = oracle::to_pairs(m.frame().E());
  g.rbox = oracle::to_pairs(m.frame().Rbox());
  g.rdia = oracle::to_pairs(m.frame().Rdia());
  for (const auto& [name, c] : m.valuation()) g.val[name] = oracle::to_set(c.extent);
  return g;
}

Model random_model(correspondence::FrameGenerator& gen, oracle::Rng& rng, std::size_t lo, std::size_t hi,
                   const std::vector<std::string>& props) {
  auto alg = make_algebra(gen.frame(lo, hi));
  const auto& lat = alg->lattice();
  Valuation v;
  for (const auto& p : props)
    v.insert_or_assign(p, lat[static_cast<std::size_t>(rng.below(static_cast<int>(lat.size())))]);
  return Model(alg, v);
}

StateSet interval(const UniversePtr& u, long lo, long hi) {
  StateSet s(u);
  for (long v = lo; v <= hi; ++v) s.insert(*u->find(std::to_string(v)));
  return s;
}

GraphFrame g3_frame(const Rel& rbox) {
  auto u = rbox.source();
  return GraphFrame::make(Rel::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}), rbox,
                          converse(Rel::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})));
}

}  // namespace

TEST_CASE("eval of constants") {
  auto m = document_model(cli::synonymy_example());
  auto z = StateSet::full(m.frame().universe());
  CHECK(m.eval(logic::Formula::top()).extent == z);
  CHECK(m.eval(logic::Formula::top()).intent.is_empty());
  CHECK(m.eval(logic::Formula::bot()).intent == z);
  for (std::size_t s = 0; s < 3; ++s) {
    CHECK(m.forces(s, logic::Formula::top()));
    CHECK(m.refutes(s, logic::Formula::bot()));
  }
  CHECK_THROWS_AS(m.eval(parse_formula("q")), Error);
}

TEST_CASE("synonymy model") {
  auto m = document_model(cli::synonymy_example());
  auto u = m.frame().universe();
  CHECK(m.value("p").extent == StateSet::of(u, {0, 1}));
  CHECK(m.value("p").intent == StateSet::of(u, {2}));
  CHECK(m.eval(parse_formula("[]p")).extent == StateSet::of(u, {1}));
  CHECK(m.forces(1, parse_formula("[]p")));
  CHECK_FALSE(m.forces(0, parse_formula("[]p")));
  CHECK(correspondence::is_E_reflexive(m.frame().E(), m.frame().Rbox()));
  CHECK(sequent_true(m, parse_sequent("[]p |- p")));
  for (const char* f : {"[]p", "<>p", "p | q", "top", "bot", "<>[]p & p"}) {
    Valuation v = m.valuation();
    v.insert_or_assign("q", m.algebra().close_extent(StateSet::of(u, {1})));
    Model mq(m.algebra_ptr(), v);
    CHECK_MESSAGE(check_pointwise_vs_algebraic(mq, parse_formula(f)), f);
  }
}

TEST_CASE("colour model") {
  std::vector<std::string> unstable;
  auto m = document_model(cli::colour_example(cli::default_colour_table()), &unstable);
  auto u = m.frame().universe();
  CHECK(std::count(unstable.begin(), unstable.end(), "green") == 1);
  CHECK(m.value("green").extent == interval(u, 519, 560));

  auto box = m.eval(parse_formula("[]green"));
  CHECK(box.extent == interval(u, 524, 556));
  auto dia = m.eval(parse_formula("<>green"));
  CHECK(dia.intent == (interval(u, 370, 512) | interval(u, 567, 780)));

  auto idx = [&](long wl) { return *u->find(std::to_string(wl)); };
  CHECK(m.refutes(idx(600), parse_formula("<>green")));
  CHECK(m.forces(idx(540), parse_formula("[]green")));
  CHECK(check_pointwise_vs_algebraic(m, parse_formula("[]green")));
}

TEST_CASE("extent candidates are closed and reported") {
  auto alg = make_algebra(cli::to_frame(cli::synonymy_example(), Check::Unchecked));
  auto u = alg->frame().universe();
  std::vector<std::string> unstable;
  auto m = Model::from_extents(alg, {{"a", StateSet::of(u, {0, 1})}, {"b", StateSet::of(u, {2})}}, &unstable);
  CHECK(unstable == std::vector<std::string>{"b"});
  CHECK(m.value("b").extent == StateSet::full(u));
  CHECK_THROWS_AS(Model(alg, {{"x", fca::Concept{StateSet::of(u, {2}), StateSet(u)}}}), InvalidStructure);
}

TEST_CASE("sequent truth basics") {
  correspondence::FrameGenerator gen(3);
  oracle::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto m = random_model(gen, rng, 1, 5, {"p"});
    CHECK(sequent_true(m, parse_sequent("p |- p")));
    CHECK(sequent_true(m, parse_sequent("bot |- p")));
    CHECK(sequent_true(m, parse_sequent("p |- top")));
  }
}

TEST_CASE("sequent truth agrees with the literal definition") {
  correspondence::FrameGenerator gen(5);
  oracle::Rng rng(6);
  std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    auto m = random_model(gen, rng, 1, 5, props);
    Sequent s{oracle::random_formula(rng, 3, props), oracle::random_formula(rng, 3, props)};
    auto g = graph_model(m);
    auto lhs = oracle::force(g, s.lhs), rhs = oracle::force(g, s.rhs);
    bool expected = true;
    for (int z : lhs.forced)
      for (int w : rhs.refuted)
        if (oracle::has(g.e, z, w)) expected = false;
    auto cex = sequent_counterexample(m, s);
    REQUIRE(cex.has_value() != expected);
    if (cex) {
      CHECK(m.forces(cex->first, s.lhs));
      CHECK(m.refutes(cex->second, s.rhs));
      CHECK(m.frame().E().contains(cex->first, cex->second));
    }
  }
}

TEST_CASE("forcing matches the clause-by-clause oracle") {
  correspondence::FrameGenerator gen(7);
  oracle::Rng rng(8);
  std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 400; ++i) {
    auto m = random_model(gen, rng, 1, 6, props);
    auto g = graph_model(m);
    auto f = oracle::random_formula(rng, 4, props);
    auto c = m.eval(f);
    auto expected = oracle::force(g, f);
    INFO(logic::print(f));
    REQUIRE(oracle::to_set(c.extent) == expected.forced);
    REQUIRE(oracle::to_set(c.intent) == expected.refuted);
    CHECK(check_pointwise_vs_algebraic(m, f));
    auto pw = pointwise(m, f);
    CHECK(oracle::to_set(pw.forced) == expected.forced);
  }
}

TEST_CASE("satisfaction and refutation sets are stable") {
  correspondence::FrameGenerator gen(9);
  oracle::Rng rng(10);
  std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    auto m = random_model(gen, rng, 1, 6, props);
    auto f = oracle::random_formula(rng, 4, props);
    auto c = m.eval(f);
    const auto& ctx = m.algebra().context();
    CHECK(fca::is_stable(ctx, c.extent));
    CHECK(fca::dual_closure(ctx, c.intent) == c.intent);
    CHECK(fca::up(ctx, c.extent) == c.intent);
    CHECK(fca::down(ctx, c.intent) == c.extent);
  }
}

TEST_CASE("E = identity gives Kripke semantics") {
  oracle::Rng rng(12);
  std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    int n = 1 + rng.below(5);
    auto u = Universe::indexed(static_cast<std::size_t>(n));
    auto alg = make_algebra(GraphFrame::make(Rel::identity(u), oracle::from_pairs(u, rng.relation(n, 0.4)),
                                             oracle::from_pairs(u, rng.relation(n, 0.4))));
    std::map<std::string, StateSet> ext;
    for (const auto& p : props) ext.insert_or_assign(p, oracle::from_set(u, rng.subset(n)));
    std::vector<std::string> unstable;
    Model m = Model::from_extents(alg, ext, &unstable);
    CHECK(unstable.empty());
    auto g = graph_model(m);
    auto f = oracle::random_formula(rng, 3, props);
    for (int z = 0; z < n; ++z) {
      bool k = oracle::kripke(g, z, f);
      REQUIRE(m.forces(static_cast<std::size_t>(z), f) == k);
      REQUIRE(m.refutes(static_cast<std::size_t>(z), f) == !k);
    }
  }
}

TEST_CASE("frame validity on the three-state graph") {
  auto u = Universe::indexed(3);
  Rel e = Rel::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  auto valid = frame_valid(make_algebra(g3_frame(e)), parse_sequent("[]p |- p"));
  CHECK(valid.valid);
  CHECK(valid.valuations == 6);

  Rel rbox = e - Rel::from_pairs(u, {{0, 1}});
  if (!frames::is_box_compatible(e, rbox)) rbox = correspondence::repair_box_compatible(e, rbox);
  REQUIRE(frames::is_box_compatible(e, rbox));
  CHECK_FALSE(e.subset_of(rbox));
  auto alg = make_algebra(g3_frame(rbox));
  auto invalid = frame_valid(alg, parse_sequent("[]p |- p"));
  CHECK_FALSE(invalid.valid);
  REQUIRE(invalid.countermodel.has_value());
  REQUIRE(invalid.witness.has_value());
  Model cm(alg, *invalid.countermodel);
  CHECK_FALSE(sequent_true(cm, parse_sequent("[]p |- p")));
  CHECK(sequent_counterexample(cm, parse_sequent("[]p |- p")) == invalid.witness);

  CHECK(frame_valid(alg, parse_sequent("bot |- p")).valid);
  CHECK(check_duality(alg, parse_sequent("[]p |- p")).agree());
  CHECK(check_duality(make_algebra(g3_frame(e)), parse_sequent("[]p |- p")).agree());
  CHECK(check_duality(alg, parse_sequent("top |- top")).frame_side);
}

TEST_CASE("duality on the synonymy frame for depth one sequents") {
  auto alg = make_algebra(cli::to_frame(cli::synonymy_example(), Check::Unchecked));
  std::vector<std::string> atoms{"p", "bot", "top", "[]p", "<>p", "[b]p", "<b>p"};
  for (const auto& l : atoms)
    for (const auto& r : atoms) {
      auto s = parse_sequent(l + " |- " + r);
      CHECK_MESSAGE(check_duality(alg, s).agree(), l, " |- ", r);
    }
}

TEST_CASE("duality on random frames") {
  correspondence::FrameGenerator gen(13);
  oracle::Rng rng(14);
  std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 150; ++i) {
    auto alg = make_algebra(gen.frame(1, 4));
    Sequent s{oracle::random_formula(rng, 2, props, false), oracle::random_formula(rng, 2, props, false)};
    auto d = check_duality(alg, s);
    INFO(logic::print(s));
    CHECK(d.agree());
  }
}

TEST_CASE("the basic logic is sound on random compatible frames") {
  const char* axioms[] = {"p |- p",          "bot |- p",         "p |- top",
                          "p |- p | q",      "q |- p | q",       "p & q |- p",
                          "p & q |- q",      "top |- []top",     "[]p & []q |- [](p & q)",
                          "<>bot |- bot",    "<>p | <>q |- <>(p | q)"};
  correspondence::FrameGenerator gen(15);
  for (int i = 0; i < 500; ++i) {
    auto alg = make_algebra(gen.frame(1, 4));
    for (const char* a : axioms) {
      auto r = frame_valid(alg, parse_sequent(a));
      REQUIRE_MESSAGE(r.valid, a);
    }
  }
}

TEST_CASE("valuation sweep respects the cap") {
  auto alg = make_algebra(cli::to_frame(cli::synonymy_example(), Check::Unchecked));
  CHECK_THROWS_AS(frame_valid(alg, parse_sequent("p & q & r |- p"), 100), CapExceeded);
  CHECK(frame_valid(alg, parse_sequent("p & q & r |- p"), 125).valid);
  std::size_t seen = 0;
  auto n = for_each_valuation(alg->lattice(), {"p"}, 100, [&](const Valuation&) { return ++seen < 3; });
  CHECK(n == 3);
}
