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
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "../support/temp_dir.hpp"
#include "arith/dataset.hpp"
#include "arith/verify.hpp"

namespace arith {
namespace {

using testing::TempDir;

const Puzzle kLong{{34, 18, 31, 41, 19, 55}, -110};

TEST(Prompt, RenderLong) { EXPECT_EQ(render_prompt(kLong), "34, 18, 31, 41, 19, 55: -110"); }

TEST(Prompt, ParseLong) {
  auto p = parse_prompt("34, 18, 31, 41, 19, 55: -110");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(*p, kLong);
}

TEST(Prompt, StrictGrammar) {
  for (const char* bad : {"1,2: 3", "1, 2:3", "1, 2:  3", "1, 2: ", ": 3", "1, 2 3", "01, 2: 3",
                          "1, 2: 3 ", " 1, 2: 3", "1, , 2: 3", "a, 2: 3"}) {
    auto p = parse_prompt(bad);
    ASSERT_FALSE(p.ok()) << bad;
    EXPECT_EQ(p.error(), FormatError::MalformedPrompt);
  }
}

TEST(Prompt, RoundTripProperty) {
  Philox4x32 rng(8, 0);
  SynthConfig cfg;
  for (int i = 0; i < 10000; ++i) {
    cfg.n = 2 + static_cast<int>(rng.below(7));
    cfg.v = 1000;
    Puzzle p{sample_candidates(cfg, rng), rng.between(-1'000'000, 1'000'000)};
    auto back = parse_prompt(render_prompt(p));
    ASSERT_TRUE(back.ok());
    ASSERT_EQ(*back, p);
  }
}

TEST(Flat, StoredLines) {
  auto line = [](const Puzzle& p, const char* response) {
    return render_flat(p, *parse_trace(response));
  };
  EXPECT_EQ(line(Puzzle{{36, 32, 57, 55, 11}, 30}, "11/36=0, 0+32=32, 55+32=87, 87-57=30"),
            "36, 32, 57, 55, 11:30S11/36=0, 0+32=32, 55+32=87, 87-57=30");
  EXPECT_EQ(line(Puzzle{{17, 6, 20, 48, 30}, -40}, "17+48=65, 30/6=5, 20+5=25, 25-65=-40"),
            "17, 6, 20, 48, 30:-40S17+48=65, 30/6=5, 20+5=25, 25-65=-40");
}

TEST(Flat, SampleAndSplitAgree) {
  const SftSample s{"36, 32, 57, 55, 11: 30", "11/36=0, 0+32=32, 55+32=87, 87-57=30", 5, 60, "x"};
  const std::string flat = render_flat(s);
  EXPECT_EQ(flat, "36, 32, 57, 55, 11:30S11/36=0, 0+32=32, 55+32=87, 87-57=30");
  auto parts = split_flat(flat);
  ASSERT_TRUE(parts.ok());
  EXPECT_EQ(parts->first, s.prompt);
  EXPECT_EQ(parts->second, s.response);
  EXPECT_FALSE(split_flat("1, 2 3S1+2=3").ok());
}

// The flat form contains the full candidate list, target and trace, so two
// samples with different (trace, target) never share a flat string.
TEST(Flat, InjectiveOverTraceAndTarget) {
  const Puzzle p{{2, 3}, 6};
  const auto a = render_flat(p, *parse_trace("2*3=6"));
  const auto b = render_flat(p, *parse_trace("3*2=6"));
  EXPECT_NE(a, b);
  EXPECT_NE(sample_key(a), sample_key(b));
}

TEST(InlinePuzzle, LenientForms) {
  const Puzzle expected{{3, 6, 7, 51, 58}, 4};
  for (const char* text : {"3,6,7,51,58:4", "3, 6, 7, 51, 58: 4", " 3 ,6,7,51,58 : 4 "}) {
    auto p = parse_inline_puzzle(text);
    ASSERT_TRUE(p.ok()) << text;
    EXPECT_EQ(*p, expected);
  }
  EXPECT_FALSE(parse_inline_puzzle("3,6,7").ok());
  EXPECT_FALSE(parse_inline_puzzle("3,,6:4").ok());
}

TEST(Jsonl, CanonicalBytes) {
  std::ostringstream out;
  JsonlWriter w(out);
  w.write(SftSample{"34, 18, 31, 41, 19, 55: -110",
                    "31-34=-3, 19+41=60, 60/-3=-20, -20/18=-2, -2*55=-110", 6, 60, "train"});
  EXPECT_EQ(out.str(),
            "{\"prompt\":\"34, 18, 31, 41, 19, 55: -110\",\"response\":\"31-34=-3, 19+41=60, "
            "60/-3=-20, -20/18=-2, -2*55=-110\",\"n\":6,\"v\":60,\"split\":\"train\"}\n");
}

TEST(Jsonl, EscapesAndParsesBack) {
  std::ostringstream out;
  JsonlWriter w(out);
  const SftSample odd{"1, 2: 3", "say \"hi\"\\\n", 2, 3, "we\"ird"};
  w.write(odd);
  std::string line = out.str();
  line.pop_back();
  EXPECT_EQ(parse_sample_line(line, 1), odd);
}

TEST(Jsonl, MalformedRecords) {
  EXPECT_THROW(parse_sample_line("not json", 1), ToolkitError);
  EXPECT_THROW(parse_sample_line("{\"prompt\":\"1, 2: 3\"}", 1), ToolkitError);
  EXPECT_THROW(parse_sample_line("[1,2]", 1), ToolkitError);
  try {
    parse_sample_line("{\"prompt\":1}", 7);
    FAIL();
  } catch (const ToolkitError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Data);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
}

TEST(Jsonl, UnreadableFile) {
  try {
    read_dataset("/nonexistent/file.jsonl");
    FAIL();
  } catch (const ToolkitError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Ledger, WriteSortedAndReadBack) {
  TempDir dir;
  DedupLedger ledger;
  for (const char* s : {"a", "b", "c", "d"}) ledger.insert(murmur3_128(s));
  write_ledger(dir / "k.keys", ledger);
  const std::string text = testing::slurp(dir / "k.keys");
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  DedupLedger back;
  read_ledger_into(dir / "k.keys", back);
  EXPECT_EQ(back.sorted_keys(), ledger.sorted_keys());

  testing::spit(dir / "bad.keys", "xyz\n");
  DedupLedger sink;
  EXPECT_THROW(read_ledger_into(dir / "bad.keys", sink), ToolkitError);
}

TEST(AllocateCounts, EvenWithRemainderToSmallest) {
  using V = std::vector<std::pair<int, std::uint64_t>>;
  EXPECT_EQ(allocate_counts(7500, {7, 5, 6}), (V{{5, 2500}, {6, 2500}, {7, 2500}}));
  EXPECT_EQ(allocate_counts(1'000'000, {5, 6, 7}), (V{{5, 333334}, {6, 333333}, {7, 333333}}));
  EXPECT_EQ(allocate_counts(5, {5, 6, 7}), (V{{5, 2}, {6, 2}, {7, 1}}));
  EXPECT_EQ(allocate_counts(0, {8}), (V{{8, 0}}));
}

std::vector<SftSample> build(const DatasetSpec& spec, DedupLedger* emitted = nullptr) {
  std::ostringstream out;
  build_split(spec, out, emitted);
  std::vector<SftSample> samples;
  std::istringstream in(out.str());
  std::uint64_t no = 0;
  for (std::string line; std::getline(in, line);) samples.push_back(parse_sample_line(line, ++no));
  return samples;
}

DatasetSpec spec_of(std::string split, std::uint64_t count, std::vector<int> ns, Value v,
                    std::optional<OpenInterval> filter = std::nullopt) {
  DatasetSpec s;
  s.split = std::move(split);
  s.count = count;
  s.n_values = std::move(ns);
  s.v = v;
  s.range_filter = filter;
  s.seed = 42;
  return s;
}

void expect_self_valid(const std::vector<SftSample>& samples) {
  for (const auto& s : samples) {
    auto p = parse_prompt(s.prompt);
    ASSERT_TRUE(p.ok());
    ASSERT_EQ(static_cast<int>(p->size()), s.n);
    ASSERT_TRUE(verify_response(*p, s.response).accepted()) << s.prompt << " | " << s.response;
  }
}

TEST(BuildSplit, InDistributionTest) {
  const auto samples = build(spec_of("id_test", 7500, {5, 6, 7}, 60));
  ASSERT_EQ(samples.size(), 7500u);
  std::map<int, int> per_n;
  for (const auto& s : samples) {
    ++per_n[s.n];
    ASSERT_EQ(s.v, 60);
    ASSERT_EQ(s.split, "id_test");
  }
  EXPECT_EQ(per_n, (std::map<int, int>{{5, 2500}, {6, 2500}, {7, 2500}}));
  expect_self_valid(samples);
}

TEST(BuildSplit, NumericalOodFilter) {
  const auto samples = build(spec_of("ood_v100", 6000, {5, 6, 7}, 100, OpenInterval{60, 100}));
  ASSERT_EQ(samples.size(), 6000u);
  for (const auto& s : samples) {
    const auto p = *parse_prompt(s.prompt);
    ASSERT_TRUE(std::any_of(p.candidates.begin(), p.candidates.end(),
                            [](Value x) { return 60 < x && x < 100; }))
        << s.prompt;
  }
  expect_self_valid(samples);
}

TEST(BuildSplit, FormOod) {
  const auto samples = build(spec_of("form_ood", 5000, {8}, 60));
  ASSERT_EQ(samples.size(), 5000u);
  for (const auto& s : samples) {
    ASSERT_EQ(s.n, 8);
    const auto p = *parse_prompt(s.prompt);
    ASSERT_EQ(p.size(), 8u);
    for (Value x : p.candidates) ASSERT_LE(x, 60);
  }
  expect_self_valid(samples);
}

TEST(BuildSplit, SingleSample) {
  const auto samples = build(spec_of("one", 1, {5}, 60));
  ASSERT_EQ(samples.size(), 1u);
  expect_self_valid(samples);
}

TEST(BuildSplit, DeterministicBytes) {
  std::ostringstream a;
  std::ostringstream b;
  auto spec = spec_of("id_test", 3000, {5, 6, 7}, 60);
  build_split(spec, a);
  spec.threads = 3;
  build_split(spec, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(BuildSplit, ExclusionHonored) {
  TempDir dir;
  // Small value space so that a second split would collide without exclusion.
  DedupLedger first_keys;
  auto first = build(spec_of("a", 300, {3}, 5), &first_keys);
  write_ledger(dir / "a.keys", first_keys);

  auto spec = spec_of("b", 300, {3}, 5);
  spec.seed = 43;
  const auto unfiltered = build(spec);
  std::size_t overlap = 0;
  for (const auto& s : unfiltered) overlap += first_keys.contains(sample_key(render_flat(s)));
  ASSERT_GT(overlap, 0u);

  spec.exclusion_sources.push_back(dir / "a.keys");
  const auto filtered = build(spec);
  ASSERT_EQ(filtered.size(), 300u);
  for (const auto& s : filtered) EXPECT_FALSE(first_keys.contains(sample_key(render_flat(s))));
}

TEST(BuildSplit, Errors) {
  std::ostringstream out;
  auto spec = spec_of("x", 10, {5}, 60);
  spec.exclusion_sources.push_back("/nonexistent/ledger.keys");
  try {
    build_split(spec, out);
    FAIL();
  } catch (const ToolkitError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
  EXPECT_THROW(build_split(spec_of("x", 10, {}, 60), out), ToolkitError);
  EXPECT_THROW(build_split(spec_of("x", 10, {5}, 100, OpenInterval{100, 1000}), out), ToolkitError);
}

}  // namespace
}  // namespace arith
