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

#pragma once

// Byte-scanning kernels used on the parse and file-ingest paths. Each kernel
// has a portable scalar reference plus AVX2 (x86-64) and NEON (AArch64)
// variants; the best supported variant is selected once at startup.

#include <cstddef>
#include <string_view>

namespace arith::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// Index of the first byte outside the trace alphabet
  /// `0-9 + - * / = , <space>`, or text.size() if every byte is legal.
  std::size_t (*first_illegal_trace_byte)(std::string_view text);
  /// Number of occurrences of `needle` in `text`.
  std::size_t (*count_byte)(std::string_view text, char needle);
};

/// Returns nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

const KernelTable& active();

/// Pins the dispatch to a specific variant (tests and benchmarks). Returns
/// false and leaves the selection unchanged if `isa` is unavailable.
bool force(Isa isa);

inline std::size_t first_illegal_trace_byte(std::string_view text) {
  return active().first_illegal_trace_byte(text);
}

inline std::size_t count_byte(std::string_view text, char needle) {
  return active().count_byte(text, needle);
}

constexpr bool is_trace_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '*' || c == '/' ||
         c == '=' || c == ',' || c == ' ';
}

namespace detail {
const KernelTable* scalar_table();
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace arith::kernels
