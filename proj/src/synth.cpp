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

#include "arith/synth.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "arith/verify.hpp"

namespace arith {
namespace {

// Consecutive rejected draws tolerated before a dataset loop gives up; only
// reachable when the configuration has fewer distinct samples than requested.
constexpr std::uint64_t kMaxConsecutiveRejections = 1'000'000;

bool passes_filter(const SynthConfig& cfg, std::span<const Value> candidates) {
  if (!cfg.require_candidate_in) return true;
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](Value x) { return cfg.require_candidate_in->contains(x); });
}

}  // namespace

const char* to_string(SynthError e) {
  switch (e) {
    case SynthError::InvalidConfig: return "InvalidConfig";
    case SynthError::SampleExhausted: return "SampleExhausted";
  }
  return "?";
}

std::optional<std::string> validate(const SynthConfig& cfg) {
  if (cfg.n < 2) return "n must be at least 2";
  if (cfg.v < 1) return "v must be at least 1";
  if (cfg.v < cfg.n) return "v must be at least n so that distinct candidates exist";
  if (cfg.max_step_retries < 0 || cfg.max_sample_retries < 0) return "retry limits must be >= 0";
  if (const auto& f = cfg.require_candidate_in) {
    if (f->lo >= f->hi) return "range filter needs lo < hi";
    if (f->hi > cfg.v) return "range filter upper bound exceeds v";
    if (std::max<Value>(f->lo + 1, 1) > std::min<Value>(f->hi - 1, cfg.v)) {
      return "range filter admits no value in [1, v]";
    }
  }
  return std::nullopt;
}

std::vector<Value> sample_candidates(const SynthConfig& cfg, Philox4x32& rng) {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(cfg.n));
  while (out.size() < static_cast<std::size_t>(cfg.n)) {
    const Value x = rng.between(1, cfg.v);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::optional<SolutionTrace> build_trace(const SynthConfig& cfg, std::span<const Value> candidates,
                                         Philox4x32& rng, SynthCounters* counters) {
  std::vector<Value> live(candidates.begin(), candidates.end());
  SolutionTrace trace;
  trace.steps.reserve(live.size() - 1);
  while (live.size() > 1) {
    const std::uint64_t k = live.size();
    bool placed = false;
    for (int attempt = 0; attempt <= cfg.max_step_retries; ++attempt) {
      const std::size_t i = rng.below(k);
      std::size_t j = rng.below(k - 1);
      if (j >= i) ++j;
      const Op op = kAllOps[rng.below(4)];
      auto c = apply(live[i], op, live[j]);
      if (!c) {
        if (counters) ++counters->step_retries;
        continue;
      }
      trace.steps.push_back(Step{live[i], op, live[j], *c});
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
      live.push_back(*c);
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  return trace;
}

Result<GeneratedSample, SynthError> synthesize_one(const SynthConfig& cfg, Philox4x32& rng,
                                                   SynthCounters* counters) {
  for (int restart = 0; restart <= cfg.max_sample_retries; ++restart) {
    std::vector<Value> candidates = sample_candidates(cfg, rng);
    while (!passes_filter(cfg, candidates)) {
      if (counters) ++counters->filter_rejections;
      candidates = sample_candidates(cfg, rng);
    }
    auto trace = build_trace(cfg, candidates, rng, counters);
    if (!trace) {
      if (counters) ++counters->sample_restarts;
      continue;
    }
    const Value target = trace->steps.empty() ? candidates.front() : trace->steps.back().result;
    return GeneratedSample{Puzzle{std::move(candidates), target}, std::move(*trace)};
  }
  return Fail{SynthError::SampleExhausted};
}

void append_flat(std::string& out, const Puzzle& puzzle, const SolutionTrace& trace) {
  for (std::size_t i = 0; i < puzzle.candidates.size(); ++i) {
    if (i > 0) out.append(", ");
    append_int(out, puzzle.candidates[i]);
  }
  out.push_back(':');
  append_int(out, puzzle.target);
  out.push_back('S');
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (i > 0) out.append(", ");
    append_step(out, trace.steps[i]);
  }
}

std::string render_flat(const Puzzle& puzzle, const SolutionTrace& trace) {
  std::string out;
  append_flat(out, puzzle, trace);
  return out;
}

std::vector<Key128> DedupLedger::sorted_keys() const {
  std::vector<Key128> out(keys_.begin(), keys_.end());
  std::sort(out.begin(), out.end());
  return out;
}

GenerationSummary& GenerationSummary::operator+=(const GenerationSummary& o) {
  emitted += o.emitted;
  duplicates_rejected += o.duplicates_rejected;
  excluded_rejected += o.excluded_rejected;
  counters.step_retries += o.counters.step_retries;
  counters.sample_restarts += o.counters.sample_restarts;
  counters.filter_rejections += o.counters.filter_rejections;
  return *this;
}

namespace {

// Draws samples until one is new with respect to `seen` and `exclusion`.
// The key is inserted into `seen`; `flat` receives the serialization.
std::optional<SynthError> draw_unique(const SynthConfig& cfg, Philox4x32& rng, DedupLedger& seen,
                                      const DedupLedger* exclusion, GenerationSummary& summary,
                                      std::string& flat, Key128& key,
                                      GeneratedSample* sample_out = nullptr) {
  std::uint64_t rejected = 0;
  while (true) {
    auto sample = synthesize_one(cfg, rng, &summary.counters);
    if (!sample) return sample.error();
    flat.clear();
    append_flat(flat, sample->puzzle, sample->trace);
    key = sample_key(flat);
    if (exclusion && exclusion->contains(key)) {
      ++summary.excluded_rejected;
    } else if (!seen.insert(key)) {
      ++summary.duplicates_rejected;
    } else {
      if (sample_out) *sample_out = std::move(*sample);
      return std::nullopt;
    }
    if (++rejected >= kMaxConsecutiveRejections) return SynthError::SampleExhausted;
  }
}

}  // namespace

Result<GenerationSummary, SynthError> synthesize_dataset(const SynthConfig& cfg, std::uint64_t count,
                                                         DedupLedger& ledger, const SampleSink& sink,
                                                         const DedupLedger* exclusion) {
  if (validate(cfg)) return Fail{SynthError::InvalidConfig};
  Philox4x32 rng(cfg.seed, 0);
  GenerationSummary summary;
  std::string flat;
  Key128 key;
  GeneratedSample sample;
  while (summary.emitted < count) {
    if (auto err = draw_unique(cfg, rng, ledger, exclusion, summary, flat, key, &sample)) {
      return Fail{*err};
    }
    sink(sample, flat);
    ++summary.emitted;
  }
  return summary;
}

void FlatBlock::push(std::string_view flat, const Key128& key) {
  arena_.append(flat);
  offsets_.push_back(arena_.size());
  keys_.push_back(key);
}

void FlatBlock::replace(std::size_t i, std::string_view flat, const Key128& key) {
  keys_[i] = key;
  auto it = std::lower_bound(overrides_.begin(), overrides_.end(), i,
                             [](const auto& e, std::size_t idx) { return e.first < idx; });
  if (it != overrides_.end() && it->first == i) {
    it->second.assign(flat);
  } else {
    overrides_.emplace(it, i, std::string(flat));
  }
}

std::string_view FlatBlock::line(std::size_t i) const {
  if (!overrides_.empty()) {
    auto it = std::lower_bound(overrides_.begin(), overrides_.end(), i,
                               [](const auto& e, std::size_t idx) { return e.first < idx; });
    if (it != overrides_.end() && it->first == i) return it->second;
  }
  return std::string_view(arena_).substr(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

Result<ShardedOutput, SynthError> synthesize_sharded(const SynthConfig& cfg, std::uint64_t count,
                                                     unsigned shards, DedupLedger& ledger,
                                                     const DedupLedger* exclusion,
                                                     unsigned max_threads) {
  if (validate(cfg) || shards == 0) return Fail{SynthError::InvalidConfig};

  ShardedOutput out;
  out.shards.resize(shards);
  std::vector<Philox4x32> streams;
  streams.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) streams.emplace_back(cfg.seed, s);
  std::vector<GenerationSummary> summaries(shards);
  std::vector<std::optional<SynthError>> errors(shards);

  auto run_shard = [&](unsigned s) {
    const std::uint64_t quota = count / shards + (s < count % shards ? 1 : 0);
    DedupLedger local(quota);
    std::string flat;
    Key128 key;
    FlatBlock& block = out.shards[s];
    for (std::uint64_t i = 0; i < quota; ++i) {
      if (auto err = draw_unique(cfg, streams[s], local, exclusion, summaries[s], flat, key)) {
        errors[s] = err;
        return;
      }
      block.push(flat, key);
      ++summaries[s].emitted;
    }
  };

  unsigned threads = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, shards);
  if (threads <= 1) {
    for (unsigned s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<unsigned> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (unsigned s = next++; s < shards; s = next++) run_shard(s);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) return Fail{*e};
  }

  ledger.reserve(ledger.size() + count);
  std::string flat;
  Key128 key;
  for (unsigned s = 0; s < shards; ++s) {
    FlatBlock& block = out.shards[s];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (ledger.insert(block.key(i))) continue;
      ++summaries[s].duplicates_rejected;
      if (auto err = draw_unique(cfg, streams[s], ledger, exclusion, summaries[s], flat, key)) {
        return Fail{*err};
      }
      block.replace(i, flat, key);
    }
    out.summary += summaries[s];
  }
  return out;
}

}  // namespace arith
