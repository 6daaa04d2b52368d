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

#include "arith/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace arith::kernels {
namespace {

inline uint8x16_t legal_mask(uint8x16_t v) {
  const uint8x16_t space = vceqq_u8(v, vdupq_n_u8(' '));
  const uint8x16_t equals = vceqq_u8(v, vdupq_n_u8('='));
  const uint8x16_t ops = vcleq_u8(vsubq_u8(v, vdupq_n_u8('*')), vdupq_n_u8('-' - '*'));
  const uint8x16_t digits = vcleq_u8(vsubq_u8(v, vdupq_n_u8('/')), vdupq_n_u8('9' - '/'));
  return vorrq_u8(vorrq_u8(space, equals), vorrq_u8(ops, digits));
}

std::size_t first_illegal_neon(std::string_view text) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    if (vminvq_u8(legal_mask(vld1q_u8(p + i))) == 0) break;
  }
  for (; i < n; ++i) {
    if (!is_trace_byte(p[i])) return i;
  }
  return n;
}

std::size_t count_byte_neon(std::string_view text, char needle) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(text.data());
  const std::size_t n = text.size();
  const uint8x16_t target = vdupq_n_u8(static_cast<std::uint8_t>(needle));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t hits = vshrq_n_u8(vceqq_u8(vld1q_u8(p + i), target), 7);
    count += vaddvq_u8(hits);
  }
  for (; i < n; ++i) count += (p[i] == static_cast<std::uint8_t>(needle));
  return count;
}

constexpr KernelTable kNeon{Isa::Neon, first_illegal_neon, count_byte_neon};

}  // namespace

const KernelTable* detail::neon_table() { return &kNeon; }

}  // namespace arith::kernels

#else

namespace arith::kernels {
const KernelTable* detail::neon_table() { return nullptr; }
}  // namespace arith::kernels

#endif
