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

#include "gbm/error.hpp"
#include "gbm/relcore/kernels.hpp"
#include "gbm/relcore/ops.hpp"
#include "oracle.hpp"

using namespace gbm;
using oracle::Pairs;
using oracle::Set;

namespace {

struct G3 {
  UniversePtr u = Universe::indexed(3);
  Pairs e_pairs{{0, 0}, {1, 1}, {2, 2}, {0, 1}};
  Rel e = oracle::from_pairs(u, e_pairs);
  StateSet set(const Set& s) const { return oracle::from_set(u, s); }
};

}  // namespace

TEST_CASE("image and preimage") {
  G3 g;
  CHECK(image(Rel(g.u, g.u), g.set({0})).is_empty());
  CHECK(image(Rel::identity(g.u), g.set({1})) == g.set({1}));
  CHECK(preimage(Rel::identity(g.u), g.set({1})) == g.set({1}));
  CHECK(preimage(Rel(g.u, g.u), g.set({0})).is_empty());

  Set expected_img = oracle::image(3, g.e_pairs, {0});
  CHECK(expected_img == Set{0, 1});
  CHECK(oracle::to_set(image(g.e, g.set({0}))) == expected_img);
  Set expected_pre = oracle::preimage(3, g.e_pairs, {1});
  CHECK(expected_pre == Set{0, 1});
  CHECK(oracle::to_set(preimage(g.e, g.set({1}))) == expected_pre);
  CHECK(dia_sem(g.e, g.set({1})) == preimage(g.e, g.set({1})));
}

TEST_CASE("classical box") {
  G3 g;
  for (const Set& w : oracle::all_subsets(3)) CHECK(box_sem(Rel::identity(g.u), g.set(w)) == g.set(w));
  CHECK(box_sem(g.e, StateSet::full(g.u)).is_full());
  Set expected = oracle::box_sem(3, g.e_pairs, {1});
  CHECK(expected == Set{1});
  CHECK(oracle::to_set(box_sem(g.e, g.set({1}))) == expected);
}

TEST_CASE("round and square operators on G3") {
  G3 g;
  CHECK(round1(g.e, StateSet(g.u)).is_full());
  CHECK(round1(Rel::identity(g.u), g.set({0, 1})).is_empty());

  CHECK(oracle::round1(3, g.e_pairs, {0}) == Set{0, 1});
  CHECK(oracle::to_set(round1(g.e, g.set({0}))) == oracle::round1(3, g.e_pairs, {0}));
  CHECK(oracle::round0(3, g.e_pairs, {1}) == Set{0, 1});
  CHECK(oracle::to_set(round0(g.e, g.set({1}))) == oracle::round0(3, g.e_pairs, {1}));

  CHECK(square1(g.e, StateSet(g.u)).is_full());
  CHECK(square0(g.e, StateSet(g.u)).is_full());
  CHECK(oracle::square1(3, g.e_pairs, {0}) == Set{2});
  CHECK(oracle::to_set(square1(g.e, g.set({0}))) == oracle::square1(3, g.e_pairs, {0}));
  CHECK(oracle::square0(3, g.e_pairs, {2}) == Set{0, 1});
  CHECK(oracle::to_set(square0(g.e, g.set({2}))) == oracle::square0(3, g.e_pairs, {2}));

  for (const Set& b : oracle::all_subsets(3)) {
    CHECK(square1(Rel::identity(g.u), g.set(b)) == g.set(b).complement());
    CHECK(square0(Rel::identity(g.u), g.set(b)) == g.set(b).complement());
  }
}

TEST_CASE("E-compositions on G3") {
  G3 g;
  Rel id = Rel::identity(g.u);
  oracle::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Rel r = oracle::from_pairs(g.u, rng.relation(3, 0.4));
    Rel s = oracle::from_pairs(g.u, rng.relation(3, 0.4));
    CHECK(comp_circ(r, s, id) == rel_compose(r, s));
    CHECK(comp_bullet(r, s, id) == rel_compose(r, s));
    CHECK(comp_circ(Rel(g.u, g.u), s, g.e).count() == 0);
    CHECK(comp_bullet(Rel(g.u, g.u), s, g.e).count() == 0);
  }
  Pairs circ = oracle::circ(3, g.e_pairs, g.e_pairs, g.e_pairs);
  CHECK(circ.count({0, 0}) == 0);
  CHECK(oracle::to_pairs(comp_circ(g.e, g.e, g.e)) == circ);
  CHECK(oracle::to_pairs(comp_bullet(g.e, g.e, g.e)) == oracle::bullet(3, g.e_pairs, g.e_pairs, g.e_pairs));
}

TEST_CASE("relation plumbing") {
  UniversePtr u2 = Universe::indexed(2);
  CHECK(oracle::to_pairs(complement(Rel::identity(u2))) == Pairs{{0, 1}, {1, 0}});
  oracle::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    UniversePtr u = Universe::indexed(1 + rng.below(70));
    Rel r = oracle::from_pairs(u, rng.relation(static_cast<int>(u->size()), 0.3));
    CHECK(converse(converse(r)) == r);
    CHECK(rel_compose(r, Rel::identity(u)) == r);
    CHECK(complement(complement(r)) == r);
  }
}

TEST_CASE("universe mismatch is rejected") {
  UniversePtr a = Universe::indexed(3);
  UniversePtr b = Universe::make({"x", "y", "z"});
  CHECK_THROWS_AS(image(Rel(a, a), StateSet(b)), UniverseMismatch);
  CHECK_THROWS_AS(comp_circ(Rel(a, a), Rel(b, b), Rel(a, a)), UniverseMismatch);
  CHECK_NOTHROW(image(Rel(a, a), StateSet(Universe::indexed(3))));
}

TEST_CASE("random operators agree with the set oracle") {
  oracle::Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + rng.below(7);
    UniversePtr u = Universe::indexed(static_cast<std::size_t>(n));
    Pairs rp = rng.relation(n, rng.unit());
    Pairs sp = rng.relation(n, rng.unit());
    Pairs ep = rng.reflexive(n, rng.unit());
    Rel r = oracle::from_pairs(u, rp), s = oracle::from_pairs(u, sp), e = oracle::from_pairs(u, ep);
    Set x = rng.subset(n);
    StateSet xs = oracle::from_set(u, x);
    CHECK(oracle::to_set(image(r, xs)) == oracle::image(n, rp, x));
    CHECK(oracle::to_set(preimage(r, xs)) == oracle::preimage(n, rp, x));
    CHECK(oracle::to_set(round1(r, xs)) == oracle::round1(n, rp, x));
    CHECK(oracle::to_set(round0(r, xs)) == oracle::round0(n, rp, x));
    CHECK(oracle::to_set(square1(r, xs)) == oracle::square1(n, rp, x));
    CHECK(oracle::to_set(square0(r, xs)) == oracle::square0(n, rp, x));
    CHECK(oracle::to_pairs(comp_circ(r, s, e)) == oracle::circ(n, rp, sp, ep));
    CHECK(oracle::to_pairs(comp_bullet(r, s, e)) == oracle::bullet(n, rp, sp, ep));
    CHECK(oracle::to_pairs(rel_compose(r, s)) == oracle::compose(n, rp, sp));
    CHECK(box_sem(r, xs) == preimage(r, xs.complement()).complement());
  }
}

TEST_CASE("Galois laws for round and square operators") {
  oracle::Rng rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + rng.below(6);
    UniversePtr u = Universe::indexed(static_cast<std::size_t>(n));
    Rel t = oracle::from_pairs(u, rng.relation(n, rng.unit()));
    StateSet x1 = oracle::from_set(u, rng.subset(n));
    StateSet x2 = x1 | oracle::from_set(u, rng.subset(n));
    StateSet v = oracle::from_set(u, rng.subset(n));
    for (bool sq : {false, true}) {
      auto op1 = [&](const StateSet& s) { return sq ? square1(t, s) : round1(t, s); };
      auto op0 = [&](const StateSet& s) { return sq ? square0(t, s) : round0(t, s); };
      CHECK(op1(x2).subset_of(op1(x1)));
      CHECK(op0(x2).subset_of(op0(x1)));
      CHECK(x1.subset_of(op0(v)) == v.subset_of(op1(x1)));
      CHECK(x1.subset_of(op0(op1(x1))));
      CHECK(op1(x1) == op1(op0(op1(x1))));
      CHECK(op0(x1 | x2 | v) == (op0(x1) & op0(x2) & op0(v)));
    }
    CHECK(square1(t, x1) == round1(complement(t), x1));
    CHECK(square0(t, x1) == round0(complement(t), x1));
  }
}

TEST_CASE("state set printing") {
  UniversePtr r = Universe::range(370, 380);
  StateSet s(r);
  for (std::size_t i : {0, 1, 2, 5, 9, 10}) s.insert(i);
  CHECK(to_string(s) == "[370,372] U [375,375] U [379,380]");
  CHECK(to_string(StateSet(r)) == "{}");
  UniversePtr w = Universe::make({"fries", "crisps", "chips"});
  CHECK(to_string(StateSet::of(w, {0, 2})) == "{fries, chips}");
}

TEST_CASE("scalar and AVX2 kernels agree") {
  const kernels::Table& scalar = kernels::scalar_table();
  const kernels::Table* avx = kernels::avx2_table();
  if (!avx) {
    MESSAGE("AVX2 kernels unavailable on this machine; comparing scalar with itself");
    avx = &scalar;
  }
  std::mt19937_64 gen(99);
  for (std::size_t len = 0; len < 24; ++len) {
    for (int rep = 0; rep < 40; ++rep) {
      std::vector<kernels::Word> a(len), b(len);
      for (auto& w : a) w = gen();
      for (auto& w : b) w = gen();
      // Bias toward sparse and subset patterns so boolean results vary.
      if (rep % 3 == 0)
        for (std::size_t i = 0; i < len; ++i) a[i] &= b[i];
      if (rep % 5 == 0) a = b;
      CHECK(scalar.is_subset(a, b) == avx->is_subset(a, b));
      CHECK(scalar.intersects(a, b) == avx->intersects(a, b));
      CHECK(scalar.equal(a, b) == avx->equal(a, b));
      CHECK(scalar.popcount(a) == avx->popcount(a));
      auto x = a, y = a;
      scalar.and_into(x, b);
      avx->and_into(y, b);
      CHECK(x == y);
      x = a, y = a;
      scalar.or_into(x, b);
      avx->or_into(y, b);
      CHECK(x == y);
      x = a, y = a;
      scalar.andnot_into(x, b);
      avx->andnot_into(y, b);
      CHECK(x == y);
    }
  }
}

TEST_CASE("operators give identical results under either kernel table") {
  oracle::Rng rng(21);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + rng.below(300);
    UniversePtr u = Universe::indexed(static_cast<std::size_t>(n));
    Rel r = oracle::from_pairs(u, rng.relation(n, 0.02 + 0.1 * rng.unit()));
    Rel e = oracle::from_pairs(u, rng.reflexive(n, 0.02));
    StateSet x = oracle::from_set(u, rng.subset(n, 0.1));
    kernels::force(kernels::Isa::Scalar);
    auto a = std::make_tuple(square0(r, x), square1(r, x), round0(r, x), image(r, x), comp_circ(r, r, e),
                             comp_bullet(r, r, e), r.subset_of(e), x.count());
    kernels::force(kernels::Isa::Avx2);
    auto b = std::make_tuple(square0(r, x), square1(r, x), round0(r, x), image(r, x), comp_circ(r, r, e),
                             comp_bullet(r, r, e), r.subset_of(e), x.count());
    kernels::reset();
    CHECK(a == b);
  }
}
