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

#include "arith/eval.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <absl/container/flat_hash_map.h>
#include <fmt/format.h>
#include <json.hpp>

namespace arith {

Ratio Ratio::reduced() const {
  if (den == 0) return *this;
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  Ratio r{num / g, den / g};
  if (r.den < 0) r = Ratio{-r.num, -r.den};
  return r;
}

std::string Ratio::str() const {
  const Ratio r = reduced();
  return fmt::format("{}/{}", r.num, r.den);
}

bool Ratio::operator==(const Ratio& o) const {
  const Ratio a = reduced();
  const Ratio b = o.reduced();
  return a.num == b.num && a.den == b.den;
}

void EvalAccumulator::add(const SftSample& sample, const std::optional<std::string>& response) {
  std::optional<Verdict> verdict;
  if (response) {
    auto puzzle = parse_prompt(sample.prompt);
    if (!puzzle) {
      throw ToolkitError(ErrorKind::Data, fmt::format("malformed prompt: {}", sample.prompt));
    }
    verdict = verify_response(*puzzle, *response);
  }
  add_verdict(sample.split, sample.v, sample.n, verdict);
}

void EvalAccumulator::add_verdict(const std::string& split, Value v, int n,
                                  const std::optional<Verdict>& verdict) {
  auto it = cells_.find(split);
  if (it == cells_.end()) {
    split_order_.push_back(split);
    it = cells_.emplace(split, std::map<std::pair<Value, int>, Cell>{}).first;
  }
  Cell& cell = it->second[{v, n}];
  ++cell.samples;
  if (verdict && verdict->accepted()) {
    ++cell.passed;
  } else {
    ++failures_[verdict ? to_string(*verdict->failure) : kNoResponse];
  }
}

EvalReport EvalAccumulator::report() const {
  EvalReport r;
  r.failures = failures_;
  for (const auto& split : split_order_) {
    EvalTotal total;
    total.split = split;
    for (const auto& [key, cell] : cells_.at(split)) {
      r.rows.push_back(EvalRow{split, key.first, key.second, cell.samples, cell.passed});
      if (std::find(total.vs.begin(), total.vs.end(), key.first) == total.vs.end()) {
        total.vs.push_back(key.first);
      }
      if (std::find(total.ns.begin(), total.ns.end(), key.second) == total.ns.end()) {
        total.ns.push_back(key.second);
      }
      total.samples += cell.samples;
      total.passed += cell.passed;
    }
    std::sort(total.ns.begin(), total.ns.end());
    r.samples += total.samples;
    r.passed += total.passed;
    r.totals.push_back(std::move(total));
  }
  return r;
}

EvalReport evaluate(const std::vector<SftSample>& samples,
                    const std::vector<std::optional<std::string>>& responses) {
  if (samples.size() != responses.size()) {
    throw ToolkitError(ErrorKind::JoinMismatch,
                       fmt::format("{} samples but {} responses", samples.size(), responses.size()));
  }
  EvalAccumulator acc;
  for (std::size_t i = 0; i < samples.size(); ++i) acc.add(samples[i], responses[i]);
  return acc.report();
}

namespace {

struct ResponseRecord {
  std::optional<std::string> prompt;
  std::optional<std::string> response;
};

ResponseRecord parse_response_line(const std::string& line, ResponseFormat format,
                                   std::uint64_t line_no) {
  if (format == ResponseFormat::Lines) return {std::nullopt, line};
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ToolkitError(ErrorKind::Data, fmt::format("responses line {}: not a JSON object", line_no));
  }
  ResponseRecord rec;
  if (auto it = j.find("prompt"); it != j.end() && it->is_string()) rec.prompt = it->get<std::string>();
  if (auto it = j.find("response"); it != j.end()) {
    if (it->is_string()) {
      rec.response = it->get<std::string>();
    } else if (!it->is_null()) {
      throw ToolkitError(ErrorKind::Data,
                         fmt::format("responses line {}: response must be a string", line_no));
    }
  }
  return rec;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolkitError(ErrorKind::Io, fmt::format("cannot open {}", path.string()));
  return in;
}

}  // namespace

EvalReport evaluate_files(const std::filesystem::path& dataset,
                          const std::filesystem::path& responses, JoinMode join,
                          ResponseFormat format) {
  EvalAccumulator acc;
  std::ifstream rin = open_or_throw(responses);
  std::string line;

  if (join == JoinMode::ByIndex) {
    std::uint64_t dataset_records = 0;
    std::uint64_t response_lines = 0;
    bool responses_done = false;
    for_each_sample(dataset, [&](SftSample&& s, std::uint64_t) {
      ++dataset_records;
      std::optional<std::string> response;
      if (!responses_done && std::getline(rin, line)) {
        ++response_lines;
        response = parse_response_line(line, format, response_lines).response;
      } else {
        responses_done = true;
      }
      acc.add(s, response);
    });
    while (std::getline(rin, line)) ++response_lines;
    if (response_lines != dataset_records) {
      throw ToolkitError(ErrorKind::JoinMismatch,
                         fmt::format("by-index join: {} dataset records but {} response lines",
                                     dataset_records, response_lines));
    }
    return acc.report();
  }

  if (format != ResponseFormat::Jsonl) {
    throw ToolkitError(ErrorKind::Usage, "by-prompt join needs JSONL responses with a prompt field");
  }
  absl::flat_hash_map<std::string, std::optional<std::string>> by_prompt;
  absl::flat_hash_map<std::string, bool> used;
  std::uint64_t line_no = 0;
  while (std::getline(rin, line)) {
    ++line_no;
    if (line.empty()) continue;
    ResponseRecord rec = parse_response_line(line, format, line_no);
    if (!rec.prompt) {
      throw ToolkitError(ErrorKind::Data, fmt::format("responses line {}: missing prompt", line_no));
    }
    if (!by_prompt.emplace(*rec.prompt, std::move(rec.response)).second) {
      throw ToolkitError(ErrorKind::JoinMismatch,
                         fmt::format("responses line {}: duplicate prompt \"{}\"", line_no, *rec.prompt));
    }
    used[*rec.prompt] = false;
  }
  for_each_sample(dataset, [&](SftSample&& s, std::uint64_t) {
    auto it = by_prompt.find(s.prompt);
    if (it == by_prompt.end()) {
      acc.add(s, std::nullopt);
      return;
    }
    used[s.prompt] = true;
    acc.add(s, it->second);
  });
  for (const auto& [prompt, seen] : used) {
    if (!seen) {
      throw ToolkitError(ErrorKind::JoinMismatch,
                         fmt::format("response for unknown prompt \"{}\"", prompt));
    }
  }
  return acc.report();
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = ARITH_VERSION;
  j["samples"] = samples;
  j["passed"] = passed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["split"] = r.split;
    row["range"] = fmt::format("[1,{}]", r.v);
    row["v"] = r.v;
    row["n"] = r.n;
    row["samples"] = r.samples;
    row["passed"] = r.passed;
    row["pass_at_1"] = r.pass_at_1().value();
    row["pass_at_1_exact"] = r.pass_at_1().str();
    j["rows"].push_back(std::move(row));
  }
  j["totals"] = nlohmann::ordered_json::array();
  for (const auto& t : totals) {
    nlohmann::ordered_json row;
    row["split"] = t.split;
    row["vs"] = t.vs;
    row["ns"] = t.ns;
    row["samples"] = t.samples;
    row["passed"] = t.passed;
    row["pass_at_1"] = t.pass_at_1().value();
    row["pass_at_1_exact"] = t.pass_at_1().str();
    j["totals"].push_back(std::move(row));
  }
  j["failures"] = nlohmann::ordered_json::object();
  for (const auto& [reason, count] : failures) j["failures"][reason] = count;
  return j.dump(1) + "\n";
}

EvalReport EvalReport::from_json(const std::string& text) {
  EvalReport r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.samples = j.at("samples").get<std::uint64_t>();
    r.passed = j.at("passed").get<std::uint64_t>();
    for (const auto& row : j.at("rows")) {
      r.rows.push_back(EvalRow{row.at("split").get<std::string>(), row.at("v").get<Value>(),
                               row.at("n").get<int>(), row.at("samples").get<std::uint64_t>(),
                               row.at("passed").get<std::uint64_t>()});
    }
    for (const auto& t : j.at("totals")) {
      r.totals.push_back(EvalTotal{t.at("split").get<std::string>(),
                                   t.at("vs").get<std::vector<Value>>(),
                                   t.at("ns").get<std::vector<int>>(),
                                   t.at("samples").get<std::uint64_t>(),
                                   t.at("passed").get<std::uint64_t>()});
    }
    if (j.contains("failures")) {
      for (const auto& [k, v] : j.at("failures").items()) r.failures[k] = v.get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ToolkitError(ErrorKind::Data, fmt::format("malformed report: {}", e.what()));
  }
  return r;
}

namespace {

std::string join_ints(const auto& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string ranges_of(const std::vector<Value>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += " ";
    out += fmt::format("[1,{}]", vs[i]);
  }
  return out;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& body,
                         const std::vector<std::size_t>& rule_after) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : body) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (std::size_t c = 0; c < cells.size(); ++c) out += fmt::format(" {:<{}} |", cells[c], width[c]);
    return out + "\n";
  };
  std::string rule = "+";
  for (std::size_t w : width) rule += std::string(w + 2, '-') + "+";
  rule += "\n";

  std::string out = rule + line(header) + rule;
  for (std::size_t i = 0; i < body.size(); ++i) {
    out += line(body[i]);
    if (std::find(rule_after.begin(), rule_after.end(), i) != rule_after.end()) out += rule;
  }
  if (body.empty() || rule_after.empty() || rule_after.back() != body.size() - 1) out += rule;
  return out;
}

}  // namespace

std::string EvalReport::to_table() const {
  std::vector<std::vector<std::string>> body;
  std::vector<std::size_t> rules;
  for (const auto& total : totals) {
    for (const auto& r : rows) {
      if (r.split != total.split) continue;
      body.push_back({r.split, fmt::format("[1,{}]", r.v), std::to_string(r.n),
                      std::to_string(r.samples), std::to_string(r.passed),
                      fmt::format("{:.3f}", r.pass_at_1().value())});
    }
    body.push_back({"Total " + total.split, ranges_of(total.vs), join_ints(total.ns),
                    std::to_string(total.samples), std::to_string(total.passed),
                    fmt::format("{:.3f}", total.pass_at_1().value())});
    rules.push_back(body.size() - 1);
  }
  return render_table({"Dataset", "Range", "Number of Integers", "Samples", "Passed", "pass@1"}, body,
                      rules);
}

namespace {

Ratio subtract(const Ratio& b, const Ratio& a) {
  if (a.den == 0 || b.den == 0) return Ratio{0, 1};
  return Ratio{b.num * a.den - a.num * b.den, a.den * b.den}.reduced();
}

}  // namespace

std::vector<DiffRow> diff_reports(const EvalReport& a, const EvalReport& b) {
  auto row_key = [](const EvalRow& r) { return fmt::format("{} [1,{}] n={}", r.split, r.v, r.n); };
  std::map<std::string, Ratio> rows_b;
  for (const auto& r : b.rows) rows_b[row_key(r)] = r.pass_at_1();
  std::map<std::string, Ratio> totals_b;
  for (const auto& t : b.totals) totals_b["Total " + t.split] = t.pass_at_1();

  if (a.rows.size() != b.rows.size() || a.totals.size() != b.totals.size()) {
    throw ToolkitError(ErrorKind::RowKeyMismatch, "reports have different row sets");
  }
  std::vector<DiffRow> out;
  auto push = [&](const std::string& key, const Ratio& ra, const std::map<std::string, Ratio>& other) {
    auto it = other.find(key);
    if (it == other.end()) {
      throw ToolkitError(ErrorKind::RowKeyMismatch, fmt::format("row {} missing from second report", key));
    }
    out.push_back(DiffRow{key, ra, it->second, subtract(it->second, ra)});
  };
  for (const auto& r : a.rows) push(row_key(r), r.pass_at_1(), rows_b);
  for (const auto& t : a.totals) push("Total " + t.split, t.pass_at_1(), totals_b);
  return out;
}

std::string diff_table(const std::vector<DiffRow>& rows) {
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({r.label, fmt::format("{:.3f}", r.a.value()), fmt::format("{:.3f}", r.b.value()),
                    fmt::format("{:+.3f}", r.delta.value()), r.delta.str()});
  }
  return render_table({"Row", "A pass@1", "B pass@1", "Delta", "Delta (exact)"}, body, {});
}

}  // namespace arith
