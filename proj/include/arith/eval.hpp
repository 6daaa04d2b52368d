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

// pass@1 scoring of response files against dataset files.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith/core.hpp"
#include "arith/dataset.hpp"
#include "arith/verify.hpp"

namespace arith {

enum class JoinMode { ByIndex, ByPrompt };
enum class ResponseFormat { Jsonl, Lines };

/// Exact fraction; denominators are sample counts so 64 bits suffice.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio reduced() const;
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Ratio& o) const;
};

struct EvalRow {
  std::string split;
  Value v = 0;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;

  Ratio pass_at_1() const {
    return Ratio{static_cast<std::int64_t>(passed), static_cast<std::int64_t>(samples)};
  }
};

struct EvalTotal {
  std::string split;
  std::vector<Value> vs;
  std::vector<int> ns;
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;

  Ratio pass_at_1() const {
    return Ratio{static_cast<std::int64_t>(passed), static_cast<std::int64_t>(samples)};
  }
};

inline constexpr const char* kNoResponse = "NoResponse";

struct EvalReport {
  std::vector<EvalRow> rows;      // split order of first appearance, then v, n
  std::vector<EvalTotal> totals;  // one per split
  std::map<std::string, std::uint64_t> failures;
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;

  std::string to_json() const;
  static EvalReport from_json(const std::string& text);
  /// Aligned plain-text table with one row per (split, V, N) and a total per split.
  std::string to_table() const;
};

/// Incremental scorer; rows and totals are rebuilt by report().
class EvalAccumulator {
 public:
  /// `response` absent means the puzzle had no response (scored as a fail).
  void add(const SftSample& sample, const std::optional<std::string>& response);
  void add_verdict(const std::string& split, Value v, int n, const std::optional<Verdict>& verdict);
  EvalReport report() const;

 private:
  struct Cell {
    std::uint64_t samples = 0;
    std::uint64_t passed = 0;
  };
  std::vector<std::string> split_order_;
  std::map<std::string, std::map<std::pair<Value, int>, Cell>> cells_;
  std::map<std::string, std::uint64_t> failures_;
};

/// Scores every sample's response; `responses[i]` belongs to `samples[i]`.
EvalReport evaluate(const std::vector<SftSample>& samples,
                    const std::vector<std::optional<std::string>>& responses);

/// File-level evaluation. By-index joins line i of the response file to
/// record i of the dataset and requires equal counts. By-prompt joins on
/// the prompt string (JSONL responses only); a duplicated or unknown prompt
/// in the response file is a JoinMismatch, a missing one scores as a fail.
EvalReport evaluate_files(const std::filesystem::path& dataset,
                          const std::filesystem::path& responses, JoinMode join,
                          ResponseFormat format);

struct DiffRow {
  std::string label;  // "split [1,V] n" or "Total split"
  Ratio a;
  Ratio b;
  Ratio delta;  // b - a
};

/// Per-row and per-total pass@1 deltas (b - a). Throws
/// ToolkitError(RowKeyMismatch) unless both reports have the same rows.
std::vector<DiffRow> diff_reports(const EvalReport& a, const EvalReport& b);

std::string diff_table(const std::vector<DiffRow>& rows);

}  // namespace arith
