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

#include "arith/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace arith {

const char* to_string(ArithError e) {
  switch (e) {
    case ArithError::DivisionByZero: return "DivisionByZero";
    case ArithError::Overflow: return "Overflow";
  }
  return "?";
}

const char* to_string(PuzzleError e) {
  switch (e) {
    case PuzzleError::TooFewCandidates: return "TooFewCandidates";
    case PuzzleError::NonPositiveCandidate: return "NonPositiveCandidate";
    case PuzzleError::DuplicateCandidate: return "DuplicateCandidate";
  }
  return "?";
}

Result<Value, ArithError> apply(Value a, Op op, Value b) {
  Value out = 0;
  switch (op) {
    case Op::Add:
      if (__builtin_add_overflow(a, b, &out)) return Fail{ArithError::Overflow};
      return out;
    case Op::Sub:
      if (__builtin_sub_overflow(a, b, &out)) return Fail{ArithError::Overflow};
      return out;
    case Op::Mul:
      if (__builtin_mul_overflow(a, b, &out)) return Fail{ArithError::Overflow};
      return out;
    case Op::Div: {
      if (b == 0) return Fail{ArithError::DivisionByZero};
      if (a == std::numeric_limits<Value>::min() && b == -1) {
        return Fail{ArithError::Overflow};
      }
      Value q = a / b;
      if (a % b != 0 && ((a < 0) != (b < 0))) --q;
      return q;
    }
  }
  return Fail{ArithError::Overflow};
}

std::optional<PuzzleError> validate(const Puzzle& p, std::size_t min_size) {
  if (p.candidates.size() < min_size) return PuzzleError::TooFewCandidates;
  std::vector<Value> sorted = p.candidates;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1) return PuzzleError::NonPositiveCandidate;
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return PuzzleError::DuplicateCandidate;
  }
  return std::nullopt;
}

MultisetState::MultisetState(std::span<const Value> values)
    : values_(values.begin(), values.end()) {
  std::sort(values_.begin(), values_.end());
}

std::size_t MultisetState::count(Value v) const {
  auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::pair<Value, std::size_t>> MultisetState::counts() const {
  std::vector<std::pair<Value, std::size_t>> out;
  for (Value v : values_) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

void MultisetState::erase_one(Value v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  values_.erase(it);
}

void MultisetState::insert(Value v) {
  values_.insert(std::upper_bound(values_.begin(), values_.end(), v), v);
}

bool MultisetState::consume_in_place(const Step& step) {
  const std::size_t needed_lhs = step.lhs == step.rhs ? 2 : 1;
  if (count(step.lhs) < needed_lhs) return false;
  if (step.lhs != step.rhs && count(step.rhs) < 1) return false;
  erase_one(step.lhs);
  erase_one(step.rhs);
  insert(step.result);
  return true;
}

Result<MultisetState, StateError> consume_and_produce(const MultisetState& state,
                                                      const Step& step) {
  MultisetState next = state;
  if (!next.consume_in_place(step)) return Fail{StateError::OperandUnavailable};
  return next;
}

void append_int(std::string& out, Value v) {
  char buf[24];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace arith
