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

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "arith/dataset.hpp"

namespace arith {

std::optional<std::string> validate(const DatasetSpec& spec) {
  if (spec.split.empty()) return "split label must be nonempty";
  if (spec.n_values.empty()) return "n_values must be nonempty";
  if (spec.shards == 0) return "shards must be >= 1";
  for (int n : spec.n_values) {
    SynthConfig cfg;
    cfg.n = n;
    cfg.v = spec.v;
    cfg.require_candidate_in = spec.range_filter;
    if (auto err = validate(cfg)) return fmt::format("n={}: {}", n, *err);
  }
  return std::nullopt;
}

std::vector<std::pair<int, std::uint64_t>> allocate_counts(std::uint64_t count,
                                                           std::vector<int> n_values) {
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
  std::vector<std::pair<int, std::uint64_t>> out;
  if (n_values.empty()) return out;
  const std::uint64_t m = n_values.size();
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    out.emplace_back(n_values[i], count / m + (i < count % m ? 1 : 0));
  }
  return out;
}

SplitSummary build_split(const DatasetSpec& spec, std::ostream& out, DedupLedger* emitted) {
  if (auto err = validate(spec)) throw ToolkitError(ErrorKind::Usage, *err);

  DedupLedger exclusion;
  for (const auto& source : spec.exclusion_sources) read_ledger_into(source, exclusion);
  const DedupLedger* excl = spec.exclusion_sources.empty() ? nullptr : &exclusion;

  SplitSummary summary;
  summary.split = spec.split;
  summary.per_n = allocate_counts(spec.count, spec.n_values);

  DedupLedger ledger(spec.count);
  JsonlWriter writer(out);
  for (const auto& [n, quota] : summary.per_n) {
    SynthConfig cfg;
    cfg.n = n;
    cfg.v = spec.v;
    cfg.seed = derive_seed(spec.seed, "n", static_cast<std::uint64_t>(n));
    cfg.require_candidate_in = spec.range_filter;

    auto result = synthesize_sharded(cfg, quota, spec.shards, ledger, excl, spec.threads);
    if (!result) {
      throw ToolkitError(ErrorKind::Data, fmt::format("split {} n={}: synthesis failed: {}",
                                                      spec.split, n, to_string(result.error())));
    }
    for (const FlatBlock& block : result->shards) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        auto parts = split_flat(block.line(i));
        writer.write(parts->first, parts->second, n, spec.v, spec.split);
      }
    }
    summary.generation += result->summary;
    summary.count += quota;
  }
  if (!out) throw ToolkitError(ErrorKind::Io, fmt::format("write failed for split {}", spec.split));
  if (emitted) emitted->merge(ledger);
  return summary;
}

}  // namespace arith
