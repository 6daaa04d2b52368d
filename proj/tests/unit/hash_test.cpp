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

#include <gtest/gtest.h>

#include "arith/hash128.hpp"
#include "arith/rng.hpp"

namespace arith {
namespace {

// Reference digests from the mmh3 package: hash128(data, seed=0, x64arch=True).
TEST(Murmur3, KnownAnswers) {
  EXPECT_EQ(murmur3_128(""), (Key128{0, 0}));
  const Key128 hello = murmur3_128("hello");
  EXPECT_EQ(hello.lo, 0xcbd8a7b341bd9b02ULL);
  EXPECT_EQ(hello.hi, 0x5b1e906a48ae1d19ULL);
  const Key128 flat = murmur3_128("34, 18, 31, 41, 19, 55:-110S31-34=-3");
  EXPECT_EQ(flat.hex(), "e3d5248614d1b8ea07e12486c04f6a17");
}

TEST(Key128, HexRoundTrip) {
  Philox4x32 rng(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const Key128 k{rng.next_u64(), rng.next_u64()};
    const std::string hex = k.hex();
    ASSERT_EQ(hex.size(), 32u);
    ASSERT_EQ(Key128::from_hex(hex), k);
  }
}

TEST(Key128, RejectsBadHex) {
  EXPECT_FALSE(Key128::from_hex("abc").has_value());
  EXPECT_FALSE(Key128::from_hex(std::string(32, 'g')).has_value());
  EXPECT_FALSE(Key128::from_hex(std::string(32, 'A')).has_value());
  EXPECT_TRUE(Key128::from_hex(std::string(32, 'f')).has_value());
}

TEST(Key128, OrderingIsHighWordFirst) {
  EXPECT_LT((Key128{0, 5}), (Key128{1, 0}));
  EXPECT_LT(Key128::from_hex("0000000000000000ffffffffffffffff"),
            Key128::from_hex("00000000000000010000000000000000"));
}

}  // namespace
}  // namespace arith
