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

#include "gbm/fca/context.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gbm/error.hpp"

namespace gbm::fca {

FormalContext::FormalContext(Rel incidence) : incidence_(std::move(incidence)) {}

StateSet up(const FormalContext& ctx, const StateSet& b) { return round1(ctx.incidence(), b); }
StateSet down(const FormalContext& ctx, const StateSet& y) { return round0(ctx.incidence(), y); }
StateSet closure(const FormalContext& ctx, const StateSet& b) { return down(ctx, up(ctx, b)); }
StateSet dual_closure(const FormalContext& ctx, const StateSet& y) { return up(ctx, down(ctx, y)); }
bool is_stable(const FormalContext& ctx, const StateSet& b) { return closure(ctx, b) == b; }
bool is_stable_intent(const FormalContext& ctx, const StateSet& y) { return dual_closure(ctx, y) == y; }

Concept concept_from_extent(const FormalContext& ctx, const StateSet& b) {
  StateSet intent = up(ctx, b);
  StateSet extent = down(ctx, intent);
  return {std::move(extent), std::move(intent)};
}

Concept concept_from_intent(const FormalContext& ctx, const StateSet& y) {
  StateSet extent = down(ctx, y);
  StateSet intent = up(ctx, extent);
  return {std::move(extent), std::move(intent)};
}

Concept meet(const FormalContext& ctx, const Concept& c, const Concept& d) {
  return concept_from_extent(ctx, c.extent & d.extent);
}

Concept join(const FormalContext& ctx, const Concept& c, const Concept& d) {
  return concept_from_intent(ctx, c.intent & d.intent);
}

namespace {

using Key = std::vector<StateSet::Word>;

Key key_of(const StateSet& s) { return Key(s.words().begin(), s.words().end()); }

class Collector {
 public:
  Collector(const FormalContext& ctx, std::size_t cap) : ctx_(ctx), cap_(cap) {}

  void add(const StateSet& extent) {
    if (seen_.emplace(key_of(extent), found_.size()).second) {
      if (found_.size() >= cap_)
        throw CapExceeded("concept count exceeds cap of " + std::to_string(cap_));
      found_.push_back(extent);
    }
  }

  std::vector<Concept> take() {
    std::sort(found_.begin(), found_.end(),
              [](const StateSet& a, const StateSet& b) { return a.shortlex_less(b); });
    std::vector<Concept> out;
    out.reserve(found_.size());
    for (auto& e : found_) out.push_back({e, up(ctx_, e)});
    return out;
  }

 private:
  const FormalContext& ctx_;
  std::size_t cap_;
  std::map<Key, std::size_t> seen_;
  std::vector<StateSet> found_;
};

void scan_subsets(const FormalContext& ctx, Collector& out) {
  const std::size_t n = ctx.objects()->size();
  if (n >= 63) throw CapExceeded("subset scan is limited to fewer than 63 objects");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    StateSet b(ctx.objects());
    b.mutable_words()[0] = mask;
    out.add(closure(ctx, b));
  }
}

void next_closure(const FormalContext& ctx, Collector& out) {
  const std::size_t n = ctx.objects()->size();
  StateSet a = closure(ctx, StateSet(ctx.objects()));
  out.add(a);
  while (!a.is_full()) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.contains(i)) {
        a.erase(i);
        continue;
      }
      StateSet candidate = a;
      candidate.insert(i);
      StateSet b = closure(ctx, candidate);
      // Accept when the closure adds nothing below i.
      bool ok = true;
      for (std::size_t j : (b - a).indices()) {
        if (j >= i) break;
        ok = false;
        break;
      }
      if (ok) {
        a = std::move(b);
        out.add(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

}  // namespace

ConceptLattice::ConceptLattice(FormalContext ctx, std::vector<Concept> concepts)
    : context_(std::move(ctx)), concepts_(std::move(concepts)) {
  const std::size_t n = concepts_.size();
  order_.assign(n * n, false);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      order_[c * n + d] = concepts_[c].extent.subset_of(concepts_[d].extent);
  // Shortlex order puts the least extent first and the largest last.
  bottom_ = 0;
  top_ = n - 1;
}

std::optional<std::size_t> ConceptLattice::find_extent(const StateSet& extent) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), extent,
                             [](const Concept& c, const StateSet& e) { return c.extent.shortlex_less(e); });
  if (it != concepts_.end() && it->extent == extent)
    return static_cast<std::size_t>(it - concepts_.begin());
  return std::nullopt;
}

std::size_t ConceptLattice::index_of(const Concept& c) const {
  if (auto i = find_extent(c.extent); i && concepts_[*i].intent == c.intent) return *i;
  throw Error("pair is not a concept of this lattice");
}

std::size_t ConceptLattice::meet(std::size_t c, std::size_t d) const {
  return *find_extent(concepts_.at(c).extent & concepts_.at(d).extent);
}

std::size_t ConceptLattice::join(std::size_t c, std::size_t d) const {
  return *find_extent(down(context_, concepts_.at(c).intent & concepts_.at(d).intent));
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      if (c == d || !leq(c, d)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < n && covered; ++m)
        if (m != c && m != d && leq(c, m) && leq(m, d)) covered = false;
      if (covered) edges.emplace_back(c, d);
    }
  }
  return edges;
}

ConceptLattice enumerate_concepts(const FormalContext& ctx, std::size_t cap, Enumeration method) {
  if (method == Enumeration::Auto)
    method = ctx.objects()->size() <= kSubsetScanLimit ? Enumeration::SubsetScan : Enumeration::NextClosure;
  Collector collector(ctx, cap);
  if (method == Enumeration::SubsetScan) scan_subsets(ctx, collector);
  else next_closure(ctx, collector);
  return ConceptLattice(ctx, collector.take());
}

}  // namespace gbm::fca
