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

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "../support/temp_dir.hpp"
#include "arith/eval.hpp"

namespace arith {
namespace {

using testing::TempDir;

std::vector<SftSample> make_split(std::string name, std::uint64_t count, std::vector<int> ns,
                                  Value v, std::uint64_t seed) {
  DatasetSpec spec;
  spec.split = std::move(name);
  spec.count = count;
  spec.n_values = std::move(ns);
  spec.v = v;
  spec.seed = seed;
  std::ostringstream out;
  build_split(spec, out);
  std::vector<SftSample> samples;
  std::istringstream in(out.str());
  std::uint64_t no = 0;
  for (std::string line; std::getline(in, line);) samples.push_back(parse_sample_line(line, ++no));
  return samples;
}

std::vector<std::optional<std::string>> references(const std::vector<SftSample>& samples) {
  std::vector<std::optional<std::string>> out;
  for (const auto& s : samples) out.emplace_back(s.response);
  return out;
}

TEST(Ratio, ReducedAndEquality) {
  EXPECT_EQ((Ratio{6, 8}).str(), "3/4");
  EXPECT_EQ((Ratio{0, 5}).str(), "0/1");
  EXPECT_TRUE((Ratio{1, 2}) == (Ratio{50, 100}));
  EXPECT_DOUBLE_EQ((Ratio{7500, 7500}).value(), 1.0);
}

TEST(Evaluate, ReferenceResponsesScoreOne) {
  const auto samples = make_split("id_test", 7500, {5, 6, 7}, 60, 11);
  const auto report = evaluate(samples, references(samples));
  EXPECT_EQ(report.samples, 7500u);
  EXPECT_EQ(report.passed, 7500u);
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.samples, 2500u);
    EXPECT_EQ(r.pass_at_1(), (Ratio{1, 1}));
  }
  ASSERT_EQ(report.totals.size(), 1u);
  EXPECT_EQ(report.totals[0].ns, (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(report.totals[0].pass_at_1(), (Ratio{1, 1}));
  EXPECT_TRUE(report.failures.empty());
}

TEST(Evaluate, EmptyResponsesScoreZero) {
  const auto samples = make_split("id_test", 300, {5, 6, 7}, 60, 12);
  std::vector<std::optional<std::string>> empty(samples.size(), std::string());
  const auto report = evaluate(samples, empty);
  EXPECT_EQ(report.passed, 0u);
  EXPECT_EQ(report.failures.at("WrongEquationCount"), 300u);
}

TEST(Evaluate, CorruptingKResponsesDropsExactlyK) {
  const auto samples = make_split("id_test", 600, {5, 6, 7}, 60, 13);
  Philox4x32 rng(99, 0);
  for (std::uint64_t k : {0u, 1u, 17u, 600u}) {
    auto responses = references(samples);
    std::vector<std::size_t> idx(samples.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    for (std::uint64_t i = 0; i < k; ++i) *responses[idx[i]] += ", 1+1=2";
    const auto report = evaluate(samples, responses);
    EXPECT_EQ(report.passed, 600u - k) << k;
  }
}

TEST(Evaluate, MissingResponseCountsAsNoResponse) {
  const auto samples = make_split("s", 10, {5}, 60, 14);
  auto responses = references(samples);
  responses[3].reset();
  const auto report = evaluate(samples, responses);
  EXPECT_EQ(report.passed, 9u);
  EXPECT_EQ(report.failures.at(kNoResponse), 1u);
  EXPECT_THROW(evaluate(samples, {}), ToolkitError);
}

TEST(Evaluate, MultipleSplitsKeepOrder) {
  auto samples = make_split("ood_v100", 30, {5, 6, 7}, 100, 1);
  const auto more = make_split("form_ood", 20, {8}, 60, 2);
  samples.insert(samples.end(), more.begin(), more.end());
  const auto report = evaluate(samples, references(samples));
  ASSERT_EQ(report.totals.size(), 2u);
  EXPECT_EQ(report.totals[0].split, "ood_v100");
  EXPECT_EQ(report.totals[1].split, "form_ood");
  const std::string table = report.to_table();
  EXPECT_NE(table.find("Total ood_v100"), std::string::npos);
  EXPECT_NE(table.find("Total form_ood"), std::string::npos);
  EXPECT_NE(table.find("Number of Integers"), std::string::npos);
  EXPECT_NE(table.find("[1,100]"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  auto samples = make_split("a", 40, {5, 6}, 60, 3);
  auto responses = references(samples);
  responses[0] = "nonsense";
  const auto report = evaluate(samples, responses);
  const auto back = EvalReport::from_json(report.to_json());
  EXPECT_EQ(back.to_json(), report.to_json());
  EXPECT_THROW(EvalReport::from_json("{}"), ToolkitError);
}

EvalReport hand_report(std::uint64_t p5, std::uint64_t p6) {
  EvalAccumulator acc;
  for (std::uint64_t i = 0; i < 4; ++i) {
    acc.add_verdict("t", 60, 5, i < p5 ? Verdict::accept() : Verdict::reject(Failure::ArithmeticMismatch, 0));
  }
  for (std::uint64_t i = 0; i < 2; ++i) {
    acc.add_verdict("t", 60, 6, i < p6 ? Verdict::accept() : Verdict::reject(Failure::ArithmeticMismatch, 0));
  }
  return acc.report();
}

TEST(Diff, SelfIsZero) {
  const auto r = hand_report(3, 1);
  for (const auto& row : diff_reports(r, r)) EXPECT_EQ(row.delta, (Ratio{0, 1})) << row.label;
}

TEST(Diff, HandComputedDeltas) {
  // a: 1/4 and 0/2, total 1/6. b: 4/4 and 1/2, total 5/6.
  const auto rows = diff_reports(hand_report(1, 0), hand_report(4, 1));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].delta, (Ratio{3, 4}));
  EXPECT_EQ(rows[1].delta, (Ratio{1, 2}));
  EXPECT_EQ(rows[2].label, "Total t");
  EXPECT_EQ(rows[2].delta, (Ratio{2, 3}));
  EXPECT_NE(diff_table(rows).find("+0.750"), std::string::npos);
}

TEST(Diff, DisjointRowsRejected) {
  EvalAccumulator other;
  other.add_verdict("u", 60, 5, Verdict::accept());
  other.add_verdict("u", 60, 6, Verdict::accept());
  try {
    diff_reports(hand_report(1, 1), other.report());
    FAIL();
  } catch (const ToolkitError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RowKeyMismatch);
  }
  EvalAccumulator smaller;
  smaller.add_verdict("t", 60, 5, Verdict::accept());
  EXPECT_THROW(diff_reports(hand_report(1, 1), smaller.report()), ToolkitError);
}

class FileJoin : public ::testing::Test {
 protected:
  void SetUp() override {
    samples_ = make_split("s", 20, {5}, 60, 5);
    std::ofstream out(dir_ / "d.jsonl");
    JsonlWriter w(out);
    for (const auto& s : samples_) w.write(s);
  }
  void write_jsonl(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::ofstream out(dir_ / "r.jsonl");
    for (const auto& [p, r] : rows) out << nlohmann::json{{"prompt", p}, {"response", r}}.dump() << "\n";
  }
  EvalReport run(JoinMode join, ResponseFormat fmt = ResponseFormat::Jsonl) {
    return evaluate_files(dir_ / "d.jsonl", dir_ / "r.jsonl", join, fmt);
  }
  ErrorKind error_of(JoinMode join, ResponseFormat fmt = ResponseFormat::Jsonl) {
    try {
      run(join, fmt);
    } catch (const ToolkitError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::Usage;
  }

  TempDir dir_;
  std::vector<SftSample> samples_;
};

TEST_F(FileJoin, ByIndexJsonl) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& s : samples_) rows.emplace_back(s.prompt, s.response);
  write_jsonl(rows);
  EXPECT_EQ(run(JoinMode::ByIndex).passed, 20u);
  rows.pop_back();
  write_jsonl(rows);
  EXPECT_EQ(error_of(JoinMode::ByIndex), ErrorKind::JoinMismatch);
}

TEST_F(FileJoin, ByIndexLines) {
  {
    std::ofstream out(dir_ / "r.jsonl");
    for (const auto& s : samples_) out << s.response << "\n";
  }
  EXPECT_EQ(run(JoinMode::ByIndex, ResponseFormat::Lines).passed, 20u);
  EXPECT_EQ(error_of(JoinMode::ByPrompt, ResponseFormat::Lines), ErrorKind::Usage);
}

TEST_F(FileJoin, ByPrompt) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = samples_.rbegin(); it != samples_.rend(); ++it) rows.emplace_back(it->prompt, it->response);
  rows.pop_back();
  write_jsonl(rows);
  const auto report = run(JoinMode::ByPrompt);
  EXPECT_EQ(report.passed, 19u);
  EXPECT_EQ(report.failures.at(kNoResponse), 1u);

  rows.push_back(rows.front());
  write_jsonl(rows);
  EXPECT_EQ(error_of(JoinMode::ByPrompt), ErrorKind::JoinMismatch);

  rows.pop_back();
  rows.emplace_back("1, 2: 3", "1+2=3");
  write_jsonl(rows);
  EXPECT_EQ(error_of(JoinMode::ByPrompt), ErrorKind::JoinMismatch);
}

TEST_F(FileJoin, MissingFiles) {
  EXPECT_EQ(error_of(JoinMode::ByIndex), ErrorKind::Io);
}

}  // namespace
}  // namespace arith
