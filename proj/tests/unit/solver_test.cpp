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

#include <set>

#include <gtest/gtest.h>

#include "arith/solver.hpp"
#include "arith/synth.hpp"
#include "arith/verify.hpp"

namespace arith {
namespace {

TEST(Solve, ExamplePuzzle) {
  const Puzzle p{{3, 6, 7, 51, 58}, 4};
  const auto out = solve(p);
  ASSERT_EQ(out.status, SolveStatus::Solvable);
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_TRUE(check_trace(p, *out.witness).accepted());
  EXPECT_GT(out.nodes_explored, 0u);
}

TEST(Solve, LongExamplePuzzle) {
  const Puzzle p{{34, 18, 31, 41, 19, 55}, -110};
  const auto out = solve(p);
  ASSERT_TRUE(out.solvable());
  EXPECT_TRUE(check_trace(p, *out.witness).accepted());
}

TEST(Solve, Unsolvable) {
  const auto out = solve(Puzzle{{1, 2}, 100});
  EXPECT_EQ(out.status, SolveStatus::Unsolvable);
  EXPECT_FALSE(out.witness.has_value());
}

// Independent oracle: every ordered pair of the two positions with every
// operator, keeping the distinct equation strings that hit the target.
TEST(Solve, CountAllTwoCandidates) {
  const Value c[2] = {2, 3};
  std::set<std::string> hits;
  for (int i = 0; i < 2; ++i) {
    const Value a = c[i];
    const Value b = c[1 - i];
    const std::pair<char, Value> results[] = {
        {'+', a + b}, {'-', a - b}, {'*', a * b}, {'/', b != 0 ? a / b : -999}};
    for (auto [sym, r] : results) {
      if (r == 6) hits.insert(std::to_string(a) + sym + std::to_string(b) + "=6");
    }
  }
  ASSERT_EQ(hits, (std::set<std::string>{"2*3=6", "3*2=6"}));

  SolveOptions opts;
  opts.mode = SolveMode::CountAll;
  const auto out = solve(Puzzle{{2, 3}, 6}, opts);
  ASSERT_TRUE(out.solution_count.has_value());
  EXPECT_EQ(*out.solution_count, hits.size());
  EXPECT_TRUE(out.solvable());
}

TEST(Solve, DegenerateSingleCandidate) {
  const auto yes = solve(Puzzle{{9}, 9});
  ASSERT_TRUE(yes.solvable());
  EXPECT_EQ(yes.witness->size(), 0u);
  EXPECT_FALSE(solve(Puzzle{{9}, 8}).solvable());
}

TEST(Solve, BudgetExceeded) {
  SolveOptions opts;
  opts.node_budget = 50;
  const auto out = solve(Puzzle{{1, 2, 3, 4, 5, 6, 7}, 999983}, opts);
  EXPECT_EQ(out.status, SolveStatus::BudgetExceeded);
  EXPECT_EQ(out.nodes_explored, 50u);
  EXPECT_FALSE(out.witness.has_value());
}

TEST(Solve, DuplicateValuesCountedOnce) {
  // {7, 7}: 7+7, 7-7, 7*7, 7/7 are single traces each.
  SolveOptions opts;
  opts.mode = SolveMode::CountAll;
  EXPECT_EQ(*solve(Puzzle{{7, 7}, 14}, opts).solution_count, 1u);
  auto naive = naive_enumerate(Puzzle{{7, 7}, 14});
  ASSERT_TRUE(naive.ok());
  EXPECT_EQ(*naive->solution_count, 1u);
}

TEST(NaiveEnumerate, RefusesLargePuzzles) {
  auto r = naive_enumerate(Puzzle{{1, 2, 3, 4, 5, 6}, 21});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error(), NaiveError::RefusedTooLarge);
}

TEST(NaiveEnumerate, DegenerateSingleCandidate) {
  auto r = naive_enumerate(Puzzle{{9}, 9});
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->solvable());
  EXPECT_EQ(r->witness->size(), 0u);
  EXPECT_EQ(*r->solution_count, 1u);
}

TEST(NaiveEnumerate, AgreesWithSolveOnCounts) {
  Philox4x32 rng(31, 0);
  SolveOptions count_all;
  count_all.mode = SolveMode::CountAll;
  for (int trial = 0; trial < 300; ++trial) {
    SynthConfig cfg;
    cfg.n = 2 + static_cast<int>(rng.below(3));  // 2..4
    cfg.v = 12;
    Puzzle p{sample_candidates(cfg, rng), rng.between(-20, 40)};
    auto naive = naive_enumerate(p);
    ASSERT_TRUE(naive.ok());
    const auto memo_first = solve(p);
    const auto counted = solve(p, count_all);
    ASSERT_EQ(naive->solvable(), memo_first.solvable());
    ASSERT_EQ(*naive->solution_count, *counted.solution_count);
    if (memo_first.witness) ASSERT_TRUE(check_trace(p, *memo_first.witness).accepted());
    if (naive->witness) ASSERT_TRUE(check_trace(p, *naive->witness).accepted());
  }
}

TEST(NaiveEnumerate, AgreesWithSolveAtFiveCandidates) {
  Philox4x32 rng(32, 0);
  SolveOptions count_all;
  count_all.mode = SolveMode::CountAll;
  SynthConfig cfg;
  cfg.n = 5;
  cfg.v = 60;
  for (int trial = 0; trial < 6; ++trial) {
    auto s = synthesize_one(cfg, rng);
    ASSERT_TRUE(s.ok());
    const Puzzle& p = s->puzzle;
    auto naive = naive_enumerate(p);
    ASSERT_TRUE(naive.ok());
    EXPECT_TRUE(naive->solvable());
    EXPECT_EQ(*naive->solution_count, *solve(p, count_all).solution_count);
  }
}

TEST(Solve, SynthesizedPuzzlesAreSolvable) {
  Philox4x32 rng(33, 0);
  for (int n : {5, 6, 7}) {
    SynthConfig cfg;
    cfg.n = n;
    cfg.v = 60;
    for (int i = 0; i < 100; ++i) {
      auto s = synthesize_one(cfg, rng);
      ASSERT_TRUE(s.ok());
      const auto out = solve(s->puzzle);
      ASSERT_TRUE(out.solvable()) << render_flat(s->puzzle, s->trace);
      ASSERT_TRUE(check_trace(s->puzzle, *out.witness).accepted());
    }
  }
}

}  // namespace
}  // namespace arith
