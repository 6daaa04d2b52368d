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

// Bottom-up puzzle synthesis: draw distinct candidates, then repeatedly pick
// two live values and an operator until one value (the target) remains.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "arith/core.hpp"
#include "arith/hash128.hpp"
#include "arith/result.hpp"
#include "arith/rng.hpp"

namespace arith {

/// Open interval (lo, hi) used by range filters.
struct OpenInterval {
  Value lo = 0;
  Value hi = 0;

  bool contains(Value x) const { return lo < x && x < hi; }
  bool operator==(const OpenInterval&) const = default;
};

struct SynthConfig {
  int n = 5;
  Value v = 60;
  std::uint64_t seed = 0;
  int max_step_retries = 32;
  int max_sample_retries = 64;
  /// When set, candidate sets without a member strictly inside the interval
  /// are redrawn.
  std::optional<OpenInterval> require_candidate_in;
};

enum class SynthError { InvalidConfig, SampleExhausted };

const char* to_string(SynthError e);

std::optional<std::string> validate(const SynthConfig& cfg);

struct GeneratedSample {
  Puzzle puzzle;
  SolutionTrace trace;
};

/// n pairwise-distinct values, each uniform on [1, v]; duplicates are redrawn.
std::vector<Value> sample_candidates(const SynthConfig& cfg, Philox4x32& rng);

struct SynthCounters {
  std::uint64_t step_retries = 0;
  std::uint64_t sample_restarts = 0;
  std::uint64_t filter_rejections = 0;
};

/// Builds a reference trace over fixed candidates. Each step draws an ordered
/// pair of distinct positions and an operator uniformly; illegal draws
/// (division by zero, overflow) are redrawn up to max_step_retries times, after
/// which the caller restarts the whole sample.
std::optional<SolutionTrace> build_trace(const SynthConfig& cfg, std::span<const Value> candidates,
                                         Philox4x32& rng, SynthCounters* counters = nullptr);

Result<GeneratedSample, SynthError> synthesize_one(const SynthConfig& cfg, Philox4x32& rng,
                                                   SynthCounters* counters = nullptr);

/// Single-line serialization "c1, c2, ...:TSresponse"; also the dedup key
/// input.
std::string render_flat(const Puzzle& puzzle, const SolutionTrace& trace);
void append_flat(std::string& out, const Puzzle& puzzle, const SolutionTrace& trace);

inline Key128 sample_key(std::string_view flat) { return murmur3_128(flat); }

class DedupLedger {
 public:
  DedupLedger() = default;
  explicit DedupLedger(std::size_t capacity_hint) { keys_.reserve(capacity_hint); }

  /// True if the key was new.
  bool insert(const Key128& key) { return keys_.insert(key).second; }
  bool contains(const Key128& key) const { return keys_.contains(key); }
  std::size_t size() const { return keys_.size(); }
  void reserve(std::size_t n) { keys_.reserve(n); }
  void merge(const DedupLedger& other) { keys_.insert(other.keys_.begin(), other.keys_.end()); }

  std::vector<Key128> sorted_keys() const;

 private:
  absl::flat_hash_set<Key128> keys_;
};

struct GenerationSummary {
  std::uint64_t emitted = 0;
  std::uint64_t duplicates_rejected = 0;
  std::uint64_t excluded_rejected = 0;
  SynthCounters counters;

  GenerationSummary& operator+=(const GenerationSummary& o);
};

/// Receives each accepted sample and its flat serialization. Exceptions
/// thrown by the sink propagate to the caller.
using SampleSink = std::function<void(const GeneratedSample&, std::string_view flat)>;

/// Emits exactly `count` samples whose keys were absent from `ledger` (and
/// from `exclusion`, if given), inserting each emitted key. Uses the single
/// stream (cfg.seed, 0).
Result<GenerationSummary, SynthError> synthesize_dataset(const SynthConfig& cfg, std::uint64_t count,
                                                         DedupLedger& ledger, const SampleSink& sink,
                                                         const DedupLedger* exclusion = nullptr);

/// Flat lines stored back to back in one buffer.
class FlatBlock {
 public:
  void push(std::string_view flat, const Key128& key);
  void replace(std::size_t i, std::string_view flat, const Key128& key);

  std::size_t size() const { return keys_.size(); }
  std::string_view line(std::size_t i) const;
  const Key128& key(std::size_t i) const { return keys_[i]; }

 private:
  std::string arena_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Key128> keys_;
  std::vector<std::pair<std::size_t, std::string>> overrides_;  // sorted by index
};

struct ShardedOutput {
  std::vector<FlatBlock> shards;
  GenerationSummary summary;
};

/// Sharded generation. Shard s draws from stream (cfg.seed, s) and owns
/// count/K samples (the first count%K shards take one extra). Shards dedup
/// privately, in parallel; a sequential merge in shard order then replaces
/// any cross-shard duplicate with a fresh sample from the owning shard's
/// stream. The output depends only on (cfg, count, shards).
Result<ShardedOutput, SynthError> synthesize_sharded(const SynthConfig& cfg, std::uint64_t count,
                                                     unsigned shards, DedupLedger& ledger,
                                                     const DedupLedger* exclusion = nullptr,
                                                     unsigned max_threads = 0);

}  // namespace arith
