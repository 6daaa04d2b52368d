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

#include "arith/suite.hpp"

#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "arith/stats.hpp"

namespace arith {

std::vector<DatasetSpec> suite_specs(const SuiteOptions& opts) {
  auto make = [&](std::string label, std::uint64_t count, std::vector<int> ns, Value v,
                  std::optional<OpenInterval> filter) {
    DatasetSpec spec;
    spec.split = std::move(label);
    spec.count = count;
    spec.n_values = std::move(ns);
    spec.v = v;
    spec.range_filter = filter;
    spec.seed = derive_seed(opts.seed, spec.split);
    spec.shards = opts.shards;
    spec.threads = opts.threads;
    return spec;
  };
  return {
      make("train", opts.train_count, {5, 6, 7}, 60, std::nullopt),
      make("id_test", 7500, {5, 6, 7}, 60, std::nullopt),
      make("ood_v100", 6000, {5, 6, 7}, 100, OpenInterval{60, 100}),
      make("ood_v1000", 6000, {5, 6, 7}, 1000, OpenInterval{100, 1000}),
      make("form_ood", 5000, {8}, 60, std::nullopt),
  };
}

std::uint64_t estimate_suite_bytes(const SuiteOptions& opts) {
  // ~130 bytes per JSONL record at N<=8 plus 33 bytes per ledger key.
  std::uint64_t samples = 0;
  for (const auto& spec : suite_specs(opts)) samples += spec.count;
  return samples * (130 + 33) + (1 << 20);
}

SuiteResult build_paper_suite(const SuiteOptions& opts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opts.out_dir / "ledgers", ec);
  fs::create_directories(opts.out_dir / "stats", ec);
  if (ec) {
    throw ToolkitError(ErrorKind::Io, fmt::format("cannot create {}: {}", opts.out_dir.string(), ec.message()));
  }
  const auto space = fs::space(opts.out_dir, ec);
  if (!ec && space.available < estimate_suite_bytes(opts)) {
    throw ToolkitError(ErrorKind::Io,
                       fmt::format("not enough free space in {}: need ~{} MB, have {} MB",
                                   opts.out_dir.string(), estimate_suite_bytes(opts) >> 20,
                                   space.available >> 20));
  }

  SuiteResult result;
  nlohmann::ordered_json manifest;
  manifest["version"] = ARITH_VERSION;
  manifest["seed"] = opts.seed;
  manifest["shards"] = opts.shards;
  manifest["rng"] = "philox4x32-10";
  manifest["exclude_train"] = opts.exclude_train;
  manifest["splits"] = nlohmann::ordered_json::array();

  const fs::path train_ledger = opts.out_dir / "ledgers" / "train.keys";
  for (DatasetSpec spec : suite_specs(opts)) {
    if (spec.split != "train" && opts.exclude_train) spec.exclusion_sources.push_back(train_ledger);

    const fs::path data_path = opts.out_dir / (spec.split + ".jsonl");
    DedupLedger ledger;
    SplitSummary summary;
    {
      std::ofstream out(data_path, std::ios::binary | std::ios::trunc);
      if (!out) throw ToolkitError(ErrorKind::Io, fmt::format("cannot write {}", data_path.string()));
      summary = build_split(spec, out, &ledger);
    }
    write_ledger(opts.out_dir / "ledgers" / (spec.split + ".keys"), ledger);

    const StatsReport stats = compute_stats(data_path);
    {
      std::ofstream out(opts.out_dir / "stats" / (spec.split + ".json"), std::ios::binary | std::ios::trunc);
      out << stats.to_json();
    }

    nlohmann::ordered_json entry;
    entry["split"] = spec.split;
    entry["file"] = spec.split + ".jsonl";
    entry["ledger"] = "ledgers/" + spec.split + ".keys";
    entry["stats"] = "stats/" + spec.split + ".json";
    entry["count"] = summary.count;
    entry["lines"] = count_lines(data_path);
    entry["v"] = spec.v;
    entry["n_values"] = spec.n_values;
    nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
    for (const auto& [n, c] : summary.per_n) per_n[std::to_string(n)] = c;
    entry["per_n"] = per_n;
    if (spec.range_filter) {
      entry["range_filter"] = {spec.range_filter->lo, spec.range_filter->hi};
    } else {
      entry["range_filter"] = nullptr;
    }
    entry["seed"] = spec.seed;
    entry["exclusion_sources"] = nlohmann::ordered_json::array();
    for (const auto& p : spec.exclusion_sources) {
      entry["exclusion_sources"].push_back(fs::relative(p, opts.out_dir).generic_string());
    }
    entry["duplicates_rejected"] = summary.generation.duplicates_rejected;
    entry["excluded_rejected"] = summary.generation.excluded_rejected;
    entry["filter_rejections"] = summary.generation.counters.filter_rejections;
    manifest["splits"].push_back(std::move(entry));
    result.splits.push_back(std::move(summary));
  }

  result.manifest = opts.out_dir / "manifest.json";
  std::ofstream out(result.manifest, std::ios::binary | std::ios::trunc);
  out << manifest.dump(1) << "\n";
  if (!out) throw ToolkitError(ErrorKind::Io, "cannot write manifest");
  return result;
}

}  // namespace arith
