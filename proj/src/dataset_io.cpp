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

#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "arith/dataset.hpp"
#include "arith/kernels.hpp"

namespace arith {
namespace {

bool needs_escape(std::string_view s) {
  for (unsigned char c : s) {
    if (c < 0x20 || c == '"' || c == '\\') return true;
  }
  return false;
}

void append_json_string(std::string& out, std::string_view s) {
  if (!needs_escape(s)) {
    out.push_back('"');
    out.append(s);
    out.push_back('"');
    return;
  }
  out.append(nlohmann::json(std::string(s)).dump());
}

}  // namespace

void JsonlWriter::write(const SftSample& s) { write(s.prompt, s.response, s.n, s.v, s.split); }

void JsonlWriter::write(std::string_view prompt, std::string_view response, int n, Value v,
                        std::string_view split) {
  if (split != split_cache_ || split_json_.empty()) {
    split_cache_ = std::string(split);
    split_json_.clear();
    append_json_string(split_json_, split);
  }
  line_.clear();
  line_.append("{\"prompt\":");
  append_json_string(line_, prompt);
  line_.append(",\"response\":");
  append_json_string(line_, response);
  line_.append(",\"n\":");
  append_int(line_, n);
  line_.append(",\"v\":");
  append_int(line_, v);
  line_.append(",\"split\":");
  line_.append(split_json_);
  line_.append("}\n");
  out_.write(line_.data(), static_cast<std::streamsize>(line_.size()));
}

SftSample parse_sample_line(std::string_view line, std::uint64_t line_no) {
  auto fail = [&](const std::string& why) {
    return ToolkitError(ErrorKind::Data, fmt::format("line {}: {}", line_no, why));
  };
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw fail("not a JSON object");
  SftSample s;
  try {
    s.prompt = j.at("prompt").get<std::string>();
    s.response = j.at("response").get<std::string>();
    s.n = j.at("n").get<int>();
    s.v = j.at("v").get<Value>();
    s.split = j.at("split").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
  return s;
}

void for_each_sample(const std::filesystem::path& path,
                     const std::function<void(SftSample&&, std::uint64_t)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolkitError(ErrorKind::Io, fmt::format("cannot open {}", path.string()));
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    fn(parse_sample_line(line, line_no), line_no);
  }
}

std::vector<SftSample> read_dataset(const std::filesystem::path& path) {
  std::vector<SftSample> out;
  for_each_sample(path, [&](SftSample&& s, std::uint64_t) { out.push_back(std::move(s)); });
  return out;
}

std::uint64_t count_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolkitError(ErrorKind::Io, fmt::format("cannot open {}", path.string()));
  std::string buf(1 << 20, '\0');
  std::uint64_t lines = 0;
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    lines += kernels::count_byte(std::string_view(buf.data(), got), '\n');
  }
  return lines;
}

void write_ledger(const std::filesystem::path& path, const DedupLedger& ledger) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ToolkitError(ErrorKind::Io, fmt::format("cannot write {}", path.string()));
  std::string buf;
  for (const Key128& k : ledger.sorted_keys()) {
    buf.append(k.hex());
    buf.push_back('\n');
    if (buf.size() > (1 << 20)) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw ToolkitError(ErrorKind::Io, fmt::format("write failed: {}", path.string()));
}

void read_ledger_into(const std::filesystem::path& path, DedupLedger& into) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ToolkitError(ErrorKind::Io, fmt::format("exclusion source unreadable: {}", path.string()));
  }
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto key = Key128::from_hex(line);
    if (!key) {
      throw ToolkitError(ErrorKind::Data,
                         fmt::format("{}:{}: malformed ledger key", path.string(), line_no));
    }
    into.insert(*key);
  }
}

DedupLedger ledger_of_dataset(const std::filesystem::path& path) {
  DedupLedger ledger;
  for_each_sample(path, [&](SftSample&& s, std::uint64_t) {
    ledger.insert(sample_key(render_flat(s)));
  });
  return ledger;
}

}  // namespace arith
