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

// Sample formats, dataset files and split construction.
//
// Prompt (dataset files):  "34, 18, 31, 41, 19, 55: -110"
// Flat line (dedup key):   "36, 32, 57, 55, 11:30S11/36=0, 0+32=32, ..."
// Dataset file: one JSON object per line with fields in this fixed order:
//   {"prompt":...,"response":...,"n":5,"v":60,"split":"train"}
// Ledger file: sorted 32-digit lowercase hex keys, one per line.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/core.hpp"
#include "arith/result.hpp"
#include "arith/synth.hpp"

namespace arith {

struct SftSample {
  std::string prompt;
  std::string response;
  int n = 0;
  Value v = 0;
  std::string split;

  bool operator==(const SftSample&) const = default;
};

enum class FormatError { MalformedPrompt, MalformedFlat };

std::string render_prompt(const Puzzle& puzzle);
Result<Puzzle, FormatError> parse_prompt(std::string_view text);

/// Flat form of a stored sample: the prompt with ":" instead of ": ", then
/// "S" and the response.
std::string render_flat(const SftSample& sample);

/// Splits a flat line back into (prompt, response).
Result<std::pair<std::string, std::string>, FormatError> split_flat(std::string_view flat);

/// Lenient puzzle syntax for command lines: "3,6,7,51,58:4" with optional
/// spaces after commas and around the colon.
Result<Puzzle, FormatError> parse_inline_puzzle(std::string_view text);

SftSample make_sample(std::string_view flat, int n, Value v, std::string_view split);

// ---- dataset files ----

class JsonlWriter {
 public:
  explicit JsonlWriter(std::ostream& out) : out_(out) {}
  void write(const SftSample& sample);
  void write(std::string_view prompt, std::string_view response, int n, Value v,
             std::string_view split);

 private:
  std::ostream& out_;
  std::string line_;
  std::string split_cache_;
  std::string split_json_;
};

/// Strict parser for one dataset record; throws ToolkitError(Data).
SftSample parse_sample_line(std::string_view line, std::uint64_t line_no);

/// Streams every record of a dataset file. Throws ToolkitError(Io) when
/// the file cannot be opened and ToolkitError(Data) on a bad record.
void for_each_sample(const std::filesystem::path& path,
                     const std::function<void(SftSample&&, std::uint64_t line_no)>& fn);

std::vector<SftSample> read_dataset(const std::filesystem::path& path);

std::uint64_t count_lines(const std::filesystem::path& path);

// ---- ledger files ----

void write_ledger(const std::filesystem::path& path, const DedupLedger& ledger);
/// Adds every key of a ledger file to `into`. Throws ToolkitError(Io) if the
/// file is unreadable and ToolkitError(Data) on a malformed key.
void read_ledger_into(const std::filesystem::path& path, DedupLedger& into);

/// Keys of every record in a dataset file, computed from its flat form.
DedupLedger ledger_of_dataset(const std::filesystem::path& path);

// ---- split construction ----

struct DatasetSpec {
  std::string split;
  std::uint64_t count = 0;
  std::vector<int> n_values;
  Value v = 60;
  std::optional<OpenInterval> range_filter;
  std::uint64_t seed = 0;
  std::vector<std::filesystem::path> exclusion_sources;
  unsigned shards = 8;
  unsigned threads = 0;  // 0 = hardware concurrency; never affects output
};

std::optional<std::string> validate(const DatasetSpec& spec);

/// Per-n quotas: count spread evenly over the sorted n values, remainder to
/// the smallest ones.
std::vector<std::pair<int, std::uint64_t>> allocate_counts(std::uint64_t count,
                                                           std::vector<int> n_values);

struct SplitSummary {
  std::string split;
  std::uint64_t count = 0;
  std::vector<std::pair<int, std::uint64_t>> per_n;
  GenerationSummary generation;
};

/// Writes the split to `out`. Emitted keys are added to `emitted` when given.
/// Throws ToolkitError(Usage) for an invalid spec, ToolkitError(Io) for an
/// unreadable exclusion source, ToolkitError(Data) on synthesis failure.
SplitSummary build_split(const DatasetSpec& spec, std::ostream& out,
                         DedupLedger* emitted = nullptr);

}  // namespace arith
