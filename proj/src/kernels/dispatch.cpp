// Copyright 2026 The arithpuzzle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>

#include "arith/kernels.hpp"

namespace arith::kernels {
namespace {

const KernelTable* best_available() {
  if (const auto* t = detail::avx2_table()) return t;
  if (const auto* t = detail::neon_table()) return t;
  return detail::scalar_table();
}

std::atomic<const KernelTable*>& selected() {
  static std::atomic<const KernelTable*> table{best_available()};
  return table;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return detail::scalar_table();
    case Isa::Avx2: return detail::avx2_table();
    case Isa::Neon: return detail::neon_table();
  }
  return nullptr;
}

const KernelTable& active() { return *selected().load(std::memory_order_relaxed); }

bool force(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) return false;
  selected().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace arith::kernels
