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

#include <string>

#include "arith/dataset.hpp"
#include "arith/verify.hpp"

namespace arith {
namespace {

// Parses "INT, INT, ..." with an exact ", " separator.
bool parse_candidate_list(std::string_view text, std::vector<Value>& out) {
  if (text.empty()) return false;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    auto v = parse_int_exact(token);
    if (!v) return false;
    out.push_back(*v);
    if (comma == std::string_view::npos) return true;
    if (comma + 1 >= text.size() || text[comma + 1] != ' ') return false;
    start = comma + 2;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string render_prompt(const Puzzle& puzzle) {
  std::string out;
  for (std::size_t i = 0; i < puzzle.candidates.size(); ++i) {
    if (i > 0) out.append(", ");
    append_int(out, puzzle.candidates[i]);
  }
  out.append(": ");
  append_int(out, puzzle.target);
  return out;
}

Result<Puzzle, FormatError> parse_prompt(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 >= text.size() || text[colon + 1] != ' ') {
    return Fail{FormatError::MalformedPrompt};
  }
  Puzzle p;
  if (!parse_candidate_list(text.substr(0, colon), p.candidates)) {
    return Fail{FormatError::MalformedPrompt};
  }
  auto target = parse_int_exact(text.substr(colon + 2));
  if (!target) return Fail{FormatError::MalformedPrompt};
  p.target = *target;
  return p;
}

std::string render_flat(const SftSample& sample) {
  std::string out;
  out.reserve(sample.prompt.size() + sample.response.size() + 1);
  const std::size_t colon = sample.prompt.find(": ");
  if (colon == std::string::npos) {
    out.append(sample.prompt);
  } else {
    out.append(sample.prompt, 0, colon);
    out.push_back(':');
    out.append(sample.prompt, colon + 2);
  }
  out.push_back('S');
  out.append(sample.response);
  return out;
}

Result<std::pair<std::string, std::string>, FormatError> split_flat(std::string_view flat) {
  const std::size_t colon = flat.find(':');
  if (colon == std::string_view::npos) return Fail{FormatError::MalformedFlat};
  const std::size_t s = flat.find('S', colon);
  if (s == std::string_view::npos) return Fail{FormatError::MalformedFlat};
  std::vector<Value> candidates;
  if (!parse_candidate_list(flat.substr(0, colon), candidates) ||
      !parse_int_exact(flat.substr(colon + 1, s - colon - 1))) {
    return Fail{FormatError::MalformedFlat};
  }
  std::string prompt;
  prompt.reserve(s + 1);
  prompt.append(flat.substr(0, colon));
  prompt.append(": ");
  prompt.append(flat.substr(colon + 1, s - colon - 1));
  return std::pair{std::move(prompt), std::string(flat.substr(s + 1))};
}

Result<Puzzle, FormatError> parse_inline_puzzle(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return Fail{FormatError::MalformedPrompt};
  Puzzle p;
  std::string_view list = text.substr(0, colon);
  while (true) {
    const std::size_t comma = list.find(',');
    auto v = parse_int_exact(trim(list.substr(0, comma)));
    if (!v) return Fail{FormatError::MalformedPrompt};
    p.candidates.push_back(*v);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  auto target = parse_int_exact(trim(text.substr(colon + 1)));
  if (!target) return Fail{FormatError::MalformedPrompt};
  p.target = *target;
  return p;
}

SftSample make_sample(std::string_view flat, int n, Value v, std::string_view split) {
  auto parts = split_flat(flat);
  SftSample s;
  if (parts) {
    s.prompt = std::move(parts->first);
    s.response = std::move(parts->second);
  }
  s.n = n;
  s.v = v;
  s.split = std::string(split);
  return s;
}

}  // namespace arith
