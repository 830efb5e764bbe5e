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

// Word-level bitset kernels. Every set and relation row in gbm is a packed
// array of 64-bit words; all of the polarity operators reduce to the handful
// of loops below. A scalar reference table is always available, an AVX2
// table is compiled in when the toolchain supports it, and the active table
// is picked once at startup from the CPU feature bits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gbm::kernels {

using Word = std::uint64_t;
using Words = std::span<Word>;
using CWords = std::span<const Word>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Function table for one instruction-set variant. Spans passed to a single
/// call always have equal length.
struct Table {
  Isa isa;
  void (*and_into)(Words dst, CWords src);     // dst &= src
  void (*or_into)(Words dst, CWords src);      // dst |= src
  void (*andnot_into)(Words dst, CWords src);  // dst &= ~src
  bool (*is_subset)(CWords a, CWords b);       // a & ~b == 0
  bool (*intersects)(CWords a, CWords b);      // a & b != 0
  bool (*equal)(CWords a, CWords b);
  std::size_t (*popcount)(CWords a);
};

const Table& scalar_table();

/// Null when the variant was not compiled in or the CPU lacks the feature.
const Table* avx2_table();

/// The table used by the rest of the library.
const Table& active();

/// Override the runtime choice (tests, benchmarking). Falls back to scalar
/// when the requested variant is unavailable; returns the ISA now active.
Isa force(Isa isa);

/// Restores the CPU-detected choice. The GBM_KERNELS environment variable
/// ("scalar" or "avx2") is honoured here as well.
Isa reset();

}  // namespace gbm::kernels
