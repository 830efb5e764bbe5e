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

#include <bit>

#include "gbm/relcore/kernels.hpp"

namespace gbm::kernels {
namespace {

void and_into(Words dst, CWords src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void or_into(Words dst, CWords src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void andnot_into(Words dst, CWords src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

bool is_subset(CWords a, CWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(CWords a, CWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equal(CWords a, CWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(CWords a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace

const Table& scalar_table() {
  static const Table table{Isa::Scalar, and_into,   or_into, andnot_into,
                           is_subset,   intersects, equal,   popcount};
  return table;
}

}  // namespace gbm::kernels
