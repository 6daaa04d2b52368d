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

// Exhaustive search over multiset states. Used as an independent oracle for
// the synthesizer and verifier and behind the `solve` command.

#include <cstdint>
#include <optional>

#include "arith/core.hpp"
#include "arith/result.hpp"

namespace arith {

enum class SolveMode {
  First,     // stop at the first witness; failed states are memoized
  CountAll,  // count every distinct step sequence reaching the target
};

enum class SolveStatus { Solvable, Unsolvable, BudgetExceeded };

const char* to_string(SolveStatus s);

struct SolveOptions {
  SolveMode mode = SolveMode::First;
  std::uint64_t node_budget = 100'000'000;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsolvable;
  std::optional<SolutionTrace> witness;
  std::optional<std::uint64_t> solution_count;
  std::uint64_t nodes_explored = 0;

  bool solvable() const { return status == SolveStatus::Solvable; }
};

/// Depth-first search. Two steps are the same branch when they have equal
/// operand values and operator, so traces are counted as distinct strings.
/// Illegal steps (division by zero, overflow) are skipped.
SolveOutcome solve(const Puzzle& puzzle, const SolveOptions& options = {});

enum class NaiveError { RefusedTooLarge };

inline constexpr std::size_t kNaiveMaxCandidates = 5;

/// Unmemoized reference enumerator over every ordered position pair and
/// operator, collecting distinct rendered traces. Refuses N > 5.
Result<SolveOutcome, NaiveError> naive_enumerate(const Puzzle& puzzle);

}  // namespace arith
