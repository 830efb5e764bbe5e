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

#include <atomic>
#include <cstdlib>
#include <string>

#include "gbm/relcore/kernels.hpp"

namespace gbm::kernels {

#if defined(GBM_HAVE_AVX2)
const Table& avx2_table_impl();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(GBM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* detect() {
  if (const char* env = std::getenv("GBM_KERNELS")) {
    if (std::string(env) == "scalar") return &scalar_table();
  }
  if (const Table* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const Table*>& slot() {
  static std::atomic<const Table*> current{detect()};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const Table* avx2_table() {
#if defined(GBM_HAVE_AVX2)
  if (cpu_has_avx2()) return &avx2_table_impl();
#endif
  return nullptr;
}

const Table& active() { return *slot().load(std::memory_order_acquire); }

Isa force(Isa isa) {
  const Table* t = &scalar_table();
  if (isa == Isa::Avx2 && avx2_table() != nullptr) t = avx2_table();
  slot().store(t, std::memory_order_release);
  return t->isa;
}

Isa reset() {
  const Table* t = detect();
  slot().store(t, std::memory_order_release);
  return t->isa;
}

}  // namespace gbm::kernels
