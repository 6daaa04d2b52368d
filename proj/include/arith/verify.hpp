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

// Strict response grammar and rule checking for solution traces.
//
//   trace    := equation (", " equation)*      (empty text = zero equations)
//   equation := INT OP INT "=" INT
//   INT      := "-"? ("0" | [1-9][0-9]*)        ("-0" is rejected)
//   OP       := "+" | "-" | "*" | "/"
//
// No other whitespace is allowed; one trailing "\n" is tolerated. In
// "60/-3=-20" the first operator after a complete integer is the binary
// operator and a following '-' belongs to the right operand.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "arith/core.hpp"
#include "arith/result.hpp"

namespace arith {

enum class Failure {
  IllegalCharacter,
  MalformedEquation,
  WrongEquationCount,
  ArithmeticMismatch,
  OperandUnavailable,
  DivisionByZero,
  Overflow,
  FinalTargetMismatch,
  LeftoverOperands,
};

inline constexpr Failure kAllFailures[] = {
    Failure::IllegalCharacter,   Failure::MalformedEquation,  Failure::WrongEquationCount,
    Failure::ArithmeticMismatch, Failure::OperandUnavailable, Failure::DivisionByZero,
    Failure::Overflow,           Failure::FinalTargetMismatch, Failure::LeftoverOperands,
};

const char* to_string(Failure f);

struct Verdict {
  std::optional<Failure> failure;
  std::optional<std::size_t> failing_step;

  bool accepted() const { return !failure.has_value(); }

  static Verdict accept() { return {}; }
  static Verdict reject(Failure f, std::optional<std::size_t> step = std::nullopt) {
    return {f, step};
  }
  bool operator==(const Verdict&) const = default;
};

struct ParseError {
  Failure failure;  // IllegalCharacter or MalformedEquation
  std::size_t equation_index;
  std::size_t byte_offset;
};

Result<SolutionTrace, ParseError> parse_trace(std::string_view text);

void append_step(std::string& out, const Step& step);
std::string render_trace(const SolutionTrace& trace);

/// Parses one INT token occupying the whole of `text`.
std::optional<Value> parse_int_exact(std::string_view text);

/// Applies every rule: N-1 equations, exact arithmetic, single use of each
/// live value, and a final state of exactly {target}. Any violation rejects;
/// the verdict names the first violated rule.
Verdict check_trace(const Puzzle& puzzle, const SolutionTrace& trace);

Verdict verify_response(const Puzzle& puzzle, std::string_view text);

}  // namespace arith
