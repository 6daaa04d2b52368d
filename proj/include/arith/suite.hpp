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

// One-shot construction of the full benchmark suite: training set, the
// in-distribution test set, two numerical OOD sets and the form OOD set.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "arith/dataset.hpp"

namespace arith {

struct SuiteOptions {
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  std::uint64_t train_count = 1'000'000;
  unsigned shards = 8;
  unsigned threads = 0;
  bool exclude_train = true;
};

/// Recipes for every split, in build order (train first).
std::vector<DatasetSpec> suite_specs(const SuiteOptions& opts);

struct SuiteResult {
  std::vector<SplitSummary> splits;
  std::filesystem::path manifest;
};

/// Writes <split>.jsonl, ledgers/<split>.keys, stats/<split>.json and
/// manifest.json into opts.out_dir. Test splits exclude the training ledger
/// when opts.exclude_train is set. Output bytes depend only on
/// (seed, train_count, shards, exclude_train).
SuiteResult build_paper_suite(const SuiteOptions& opts);

/// Rough on-disk footprint of a suite, used for the free-space check.
std::uint64_t estimate_suite_bytes(const SuiteOptions& opts);

}  // namespace arith
