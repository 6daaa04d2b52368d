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

#include "arith/stats.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace arith {

std::size_t count_tokens(std::string_view text) {
  std::size_t tokens = 0;
  bool in_digits = false;
  for (char c : text) {
    const bool digit = c >= '0' && c <= '9';
    if (digit) {
      if (!in_digits) ++tokens;
    } else if (c != ' ') {
      ++tokens;
    }
    in_digits = digit;
  }
  return tokens;
}

void StatsReport::add(const SftSample& sample) {
  ++samples;
  ++n[sample.n];
  auto puzzle = parse_prompt(sample.prompt);
  if (!puzzle) {
    throw ToolkitError(ErrorKind::Data, fmt::format("malformed prompt: {}", sample.prompt));
  }
  for (Value c : puzzle->candidates) ++x[c];
  ++prompt_chars[static_cast<std::int64_t>(sample.prompt.size())];
  ++response_chars[static_cast<std::int64_t>(sample.response.size())];
  ++prompt_tokens[static_cast<std::int64_t>(count_tokens(sample.prompt))];
  ++response_tokens[static_cast<std::int64_t>(count_tokens(sample.response))];
}

void StatsReport::merge(const StatsReport& other) {
  samples += other.samples;
  auto add_all = [](Histogram& into, const Histogram& from) {
    for (const auto& [k, v] : from) into[k] += v;
  };
  add_all(n, other.n);
  add_all(x, other.x);
  add_all(prompt_chars, other.prompt_chars);
  add_all(response_chars, other.response_chars);
  add_all(prompt_tokens, other.prompt_tokens);
  add_all(response_tokens, other.response_tokens);
}

std::string StatsReport::to_json() const {
  auto hist = [](const Histogram& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : h) arr.push_back({k, v});
    return arr;
  };
  nlohmann::ordered_json j;
  j["samples"] = samples;
  j["token_scheme"] = "digit-run=1, other non-space char=1";
  j["n_histogram"] = hist(n);
  j["x_histogram"] = hist(x);
  j["prompt_chars"] = hist(prompt_chars);
  j["response_chars"] = hist(response_chars);
  j["prompt_tokens"] = hist(prompt_tokens);
  j["response_tokens"] = hist(response_tokens);
  return j.dump(1) + "\n";
}

StatsReport compute_stats(const std::filesystem::path& dataset) {
  StatsReport report;
  for_each_sample(dataset, [&](SftSample&& s, std::uint64_t) { report.add(s); });
  return report;
}

}  // namespace arith
