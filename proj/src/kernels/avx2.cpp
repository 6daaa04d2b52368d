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

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace arith::kernels {
namespace {

// Legal bytes: 0x20 (space), 0x2A-0x2D (* + , -), 0x2F-0x39 (/ and digits),
// 0x3D (=). Range checks use signed compares against bounds shifted by one.
__attribute__((target("avx2"))) inline __m256i legal_mask(__m256i v) {
  const __m256i space = _mm256_cmpeq_epi8(v, _mm256_set1_epi8(' '));
  const __m256i equals = _mm256_cmpeq_epi8(v, _mm256_set1_epi8('='));
  const __m256i ops = _mm256_and_si256(_mm256_cmpgt_epi8(v, _mm256_set1_epi8('*' - 1)),
                                       _mm256_cmpgt_epi8(_mm256_set1_epi8('-' + 1), v));
  const __m256i digits = _mm256_and_si256(_mm256_cmpgt_epi8(v, _mm256_set1_epi8('/' - 1)),
                                          _mm256_cmpgt_epi8(_mm256_set1_epi8('9' + 1), v));
  return _mm256_or_si256(_mm256_or_si256(space, equals), _mm256_or_si256(ops, digits));
}

__attribute__((target("avx2"))) std::size_t first_illegal_avx2(std::string_view text) {
  const char* p = text.data();
  const std::size_t n = text.size();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const auto legal = static_cast<std::uint32_t>(_mm256_movemask_epi8(legal_mask(v)));
    if (legal != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~legal));
  }
  for (; i < n; ++i) {
    if (!is_trace_byte(static_cast<unsigned char>(p[i]))) return i;
  }
  return n;
}

__attribute__((target("avx2,popcnt"))) std::size_t count_byte_avx2(std::string_view text,
                                                                   char needle) {
  const char* p = text.data();
  const std::size_t n = text.size();
  const __m256i target = _mm256_set1_epi8(needle);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const auto hits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, target)));
    count += static_cast<std::size_t>(__builtin_popcount(hits));
  }
  for (; i < n; ++i) count += (p[i] == needle);
  return count;
}

constexpr KernelTable kAvx2{Isa::Avx2, first_illegal_avx2, count_byte_avx2};

}  // namespace

const KernelTable* detail::avx2_table() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace arith::kernels

#else

namespace arith::kernels {
const KernelTable* detail::avx2_table() { return nullptr; }
}  // namespace arith::kernels

#endif
