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

// Dataset statistics: histograms of N, candidate values, and prompt/response
// lengths in characters and tokens.
//
// Token scheme: a maximal run of digits is one token, every other
// non-space character is one token, spaces are not counted.
// "31-34=-3" -> 31 | - | 34 | = | - | 3 -> 6 tokens.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "arith/core.hpp"
#include "arith/dataset.hpp"

namespace arith {

std::size_t count_tokens(std::string_view text);

using Histogram = std::map<std::int64_t, std::uint64_t>;

struct StatsReport {
  std::uint64_t samples = 0;
  Histogram n;
  Histogram x;
  Histogram prompt_chars;
  Histogram response_chars;
  Histogram prompt_tokens;
  Histogram response_tokens;

  void add(const SftSample& sample);
  /// Histogram merge; commutative and associative.
  void merge(const StatsReport& other);

  /// JSON document; histograms are arrays of [value, count] pairs in
  /// ascending value order.
  std::string to_json() const;

  bool operator==(const StatsReport&) const = default;
};

StatsReport compute_stats(const std::filesystem::path& dataset);

}  // namespace arith
