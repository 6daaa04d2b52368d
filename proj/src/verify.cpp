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

#include "arith/verify.hpp"

#include <charconv>

#include "arith/kernels.hpp"

namespace arith {

const char* to_string(Failure f) {
  switch (f) {
    case Failure::IllegalCharacter: return "IllegalCharacter";
    case Failure::MalformedEquation: return "MalformedEquation";
    case Failure::WrongEquationCount: return "WrongEquationCount";
    case Failure::ArithmeticMismatch: return "ArithmeticMismatch";
    case Failure::OperandUnavailable: return "OperandUnavailable";
    case Failure::DivisionByZero: return "DivisionByZero";
    case Failure::Overflow: return "Overflow";
    case Failure::FinalTargetMismatch: return "FinalTargetMismatch";
    case Failure::LeftoverOperands: return "LeftoverOperands";
  }
  return "?";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Cursor over one equation; every method either consumes a token or fails.
class EquationReader {
 public:
  explicit EquationReader(std::string_view text) : text_(text) {}

  bool read_int(Value& out) {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    const std::size_t len = pos_ - digits;
    if (len == 0) return false;
    if (len > 1 && text_[digits] == '0') return false;
    if (len == 1 && text_[digits] == '0' && digits != start) return false;  // "-0"
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, out);
    return res.ec == std::errc{} && res.ptr == text_.data() + pos_;
  }

  bool read_op(Op& out) {
    if (pos_ >= text_.size()) return false;
    auto op = op_from_symbol(text_[pos_]);
    if (!op) return false;
    out = *op;
    ++pos_;
    return true;
  }

  bool read_char(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }

  bool done() const { return pos_ == text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool parse_equation(std::string_view text, Step& step) {
  EquationReader r(text);
  return r.read_int(step.lhs) && r.read_op(step.op) && r.read_int(step.rhs) && r.read_char('=') &&
         r.read_int(step.result) && r.done();
}

}  // namespace

std::optional<Value> parse_int_exact(std::string_view text) {
  EquationReader r(text);
  Value v = 0;
  if (!r.read_int(v) || !r.done()) return std::nullopt;
  return v;
}

Result<SolutionTrace, ParseError> parse_trace(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);

  const std::size_t bad = kernels::first_illegal_trace_byte(text);
  if (bad != text.size()) {
    const auto eq = kernels::count_byte(text.substr(0, bad), ',');
    return Fail{ParseError{Failure::IllegalCharacter, eq, bad}};
  }

  SolutionTrace trace;
  if (text.empty()) return trace;

  std::size_t start = 0;
  std::size_t index = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view eq =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Step step;
    if (!parse_equation(eq, step)) {
      return Fail{ParseError{Failure::MalformedEquation, index, start}};
    }
    trace.steps.push_back(step);
    if (comma == std::string_view::npos) break;
    // Separator must be exactly ", " followed by another equation.
    if (comma + 1 >= text.size() || text[comma + 1] != ' ') {
      return Fail{ParseError{Failure::MalformedEquation, index + 1, comma}};
    }
    start = comma + 2;
    ++index;
  }
  return trace;
}

void append_step(std::string& out, const Step& step) {
  append_int(out, step.lhs);
  out.push_back(op_symbol(step.op));
  append_int(out, step.rhs);
  out.push_back('=');
  append_int(out, step.result);
}

std::string render_trace(const SolutionTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (i > 0) out.append(", ");
    append_step(out, trace.steps[i]);
  }
  return out;
}

Verdict check_trace(const Puzzle& puzzle, const SolutionTrace& trace) {
  const std::size_t expected = puzzle.candidates.empty() ? 0 : puzzle.candidates.size() - 1;
  if (trace.steps.size() != expected) {
    return Verdict::reject(Failure::WrongEquationCount);
  }

  MultisetState state(puzzle.candidates);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& step = trace.steps[i];
    auto value = apply(step.lhs, step.op, step.rhs);
    if (!value) {
      return Verdict::reject(value.error() == ArithError::DivisionByZero ? Failure::DivisionByZero
                                                                           : Failure::Overflow,
                             i);
    }
    if (*value != step.result) return Verdict::reject(Failure::ArithmeticMismatch, i);
    if (!state.consume_in_place(step)) return Verdict::reject(Failure::OperandUnavailable, i);
  }

  if (state.size() != 1) return Verdict::reject(Failure::LeftoverOperands);
  if (state.values()[0] != puzzle.target) return Verdict::reject(Failure::FinalTargetMismatch);
  return Verdict::accept();
}

Verdict verify_response(const Puzzle& puzzle, std::string_view text) {
  auto trace = parse_trace(text);
  if (!trace) return Verdict::reject(trace.error().failure, trace.error().equation_index);
  return check_trace(puzzle, *trace);
}

}  // namespace arith
