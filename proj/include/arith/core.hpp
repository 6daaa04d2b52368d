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

// Puzzle domain types and the integer arithmetic shared by the synthesizer,
// the verifier and the solver.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith/result.hpp"

namespace arith {

using Value = std::int64_t;

enum class Op : std::uint8_t { Add, Sub, Mul, Div };

inline constexpr Op kAllOps[] = {Op::Add, Op::Sub, Op::Mul, Op::Div};

constexpr char op_symbol(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
  }
  return '?';
}

constexpr std::optional<Op> op_from_symbol(char c) {
  switch (c) {
    case '+': return Op::Add;
    case '-': return Op::Sub;
    case '*': return Op::Mul;
    case '/': return Op::Div;
    default: return std::nullopt;
  }
}

enum class ArithError { DivisionByZero, Overflow };

const char* to_string(ArithError e);

/// Evaluates `a op b` exactly. Division rounds toward negative infinity
/// (-20/18 = -2, 7/-2 = -4). Any result outside the signed 64-bit range is
/// reported as Overflow rather than wrapped.
Result<Value, ArithError> apply(Value a, Op op, Value b);

struct Puzzle {
  std::vector<Value> candidates;
  Value target = 0;

  std::size_t size() const { return candidates.size(); }
  bool operator==(const Puzzle&) const = default;
};

enum class PuzzleError { TooFewCandidates, NonPositiveCandidate, DuplicateCandidate };

const char* to_string(PuzzleError e);

/// Checks the synthesis-side invariants: at least `min_size` candidates, all
/// >= 1, pairwise distinct. Verification and solving accept any puzzle.
std::optional<PuzzleError> validate(const Puzzle& p, std::size_t min_size = 2);

struct Step {
  Value lhs = 0;
  Op op = Op::Add;
  Value rhs = 0;
  Value result = 0;

  bool operator==(const Step&) const = default;
};

struct SolutionTrace {
  std::vector<Step> steps;

  std::size_t size() const { return steps.size(); }
  bool operator==(const SolutionTrace&) const = default;
};

enum class StateError { OperandUnavailable };

/// Multiset of live values. Stored as a sorted vector; puzzles are small
/// (N <= 8 in practice) so linear scans beat any node-based map.
class MultisetState {
 public:
  MultisetState() = default;
  explicit MultisetState(std::span<const Value> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::size_t count(Value v) const;
  std::span<const Value> values() const { return values_; }

  /// (value, multiplicity) pairs in ascending value order.
  std::vector<std::pair<Value, std::size_t>> counts() const;

  /// Removes one lhs and one rhs (two copies when lhs == rhs) and inserts
  /// the step result. Leaves the state untouched on failure.
  bool consume_in_place(const Step& step);

  bool operator==(const MultisetState&) const = default;

 private:
  void erase_one(Value v);
  void insert(Value v);

  std::vector<Value> values_;
};

Result<MultisetState, StateError> consume_and_produce(const MultisetState& state,
                                                      const Step& step);

/// Decimal rendering used everywhere in data files.
void append_int(std::string& out, Value v);

}  // namespace arith
