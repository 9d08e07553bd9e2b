// Copyright 2026 The wl1nmf Authors.
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

#include "wl1nmf/kernels.h"

namespace wl1nmf::kernels {

#ifndef WL1NMF_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(WL1NMF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  throw InvalidArgument("unknown instruction set '" + std::string(name) +
                        "' (expected scalar or avx2)");
}

namespace {

const KernelTable* table_for(Isa isa) {
  if (!cpu_supports(isa)) return nullptr;
  return isa == Isa::kScalar ? &scalar_table() : avx2_table();
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("WL1NMF_ISA"); env != nullptr && *env) {
    if (const KernelTable* t = table_for(parse_isa(env))) return t;
  }
  if (const KernelTable* t = table_for(Isa::kAvx2)) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& active() {
  return *current().load(std::memory_order_relaxed);
}

void select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) {
    throw InvalidArgument("instruction set not available on this build/CPU");
  }
  current().store(t, std::memory_order_relaxed);
}

}  // namespace wl1nmf::kernels
