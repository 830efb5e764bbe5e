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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "gbm/relcore/kernels.hpp"

namespace gbm::kernels {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void and_into(Words dst, CWords src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void or_into(Words dst, CWords src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void andnot_into(Words dst, CWords src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  // _mm256_andnot_si256(a, b) computes ~a & b.
  for (; i + kLanes <= n; i += kLanes)
    store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool is_subset(CWords a, CWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    // testc(b, a) == 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(CWords a, CWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equal(CWords a, CWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i x = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(CWords a) {
  // No native AVX2 popcount; the scalar POPCNT per word is already the
  // fastest option at these lengths.
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace

const Table& avx2_table_impl() {
  static const Table table{Isa::Avx2, and_into,   or_into, andnot_into,
                           is_subset, intersects, equal,   popcount};
  return table;
}

}  // namespace gbm::kernels
