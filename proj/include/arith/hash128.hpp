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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace arith {

/// 128-bit content key. Rendered as 32 lowercase hex digits, high word first.
struct Key128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  auto operator<=>(const Key128&) const = default;

  std::string hex() const;
  static std::optional<Key128> from_hex(std::string_view text);

  template <typename H>
  friend H AbslHashValue(H h, const Key128& k) {
    return H::combine(std::move(h), k.hi, k.lo);
  }
};

/// MurmurHash3_x64_128 (Austin Appleby, public domain). `hi` holds the
/// second output word, `lo` the first, matching the usual little-endian
/// digest layout read as a 128-bit integer.
Key128 murmur3_128(std::string_view data, std::uint32_t seed = 0);

}  // namespace arith
