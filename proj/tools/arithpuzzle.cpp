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

// Command-line front end: gen, verify, eval, diff, solve, stats, paper-suite.
//
// Exit codes: 0 = operation completed (including failed verifications),
// 1 = usage error, 2 = data or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "arith/dataset.hpp"
#include "arith/eval.hpp"
#include "arith/kernels.hpp"
#include "arith/solver.hpp"
#include "arith/stats.hpp"
#include "arith/suite.hpp"
#include "arith/verify.hpp"

namespace {

using arith::ErrorKind;
using arith::ToolkitError;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ToolkitError(ErrorKind::Io, fmt::format("cannot write {}", path));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolkitError(ErrorKind::Io, fmt::format("cannot open {}", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- gen ----

struct GenArgs {
  std::uint64_t count = 0;
  std::vector<int> n_values{5, 6, 7};
  std::int64_t v = 60;
  std::uint64_t seed = 0;
  std::string out;
  std::string split = "custom";
  std::vector<std::int64_t> range;
  std::vector<std::string> exclude;
  std::string ledger_out;
  unsigned shards = 8;
  unsigned threads = 0;
};

int run_gen(const GenArgs& a) {
  arith::DatasetSpec spec;
  spec.split = a.split;
  spec.count = a.count;
  spec.n_values = a.n_values;
  spec.v = a.v;
  spec.seed = a.seed;
  spec.shards = a.shards;
  spec.threads = a.threads;
  if (!a.range.empty()) spec.range_filter = arith::OpenInterval{a.range[0], a.range[1]};
  for (const auto& e : a.exclude) spec.exclusion_sources.emplace_back(e);
  if (auto err = arith::validate(spec)) throw ToolkitError(ErrorKind::Usage, *err);

  const auto t0 = Clock::now();
  arith::DedupLedger ledger;
  arith::SplitSummary summary;
  {
    std::ofstream out = open_out(a.out);
    summary = arith::build_split(spec, out, &ledger);
  }
  if (!a.ledger_out.empty()) arith::write_ledger(a.ledger_out, ledger);
  const double secs = seconds_since(t0);

  nlohmann::ordered_json j;
  j["version"] = ARITH_VERSION;
  j["command"] = "gen";
  j["config"] = {{"split", a.split},     {"count", a.count},   {"n_values", a.n_values},
                 {"v", a.v},             {"seed", a.seed},     {"shards", a.shards},
                 {"require_range", a.range}, {"exclude", a.exclude}, {"out", a.out},
                 {"ledger_out", a.ledger_out}};
  j["emitted"] = summary.count;
  nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
  for (const auto& [n, c] : summary.per_n) per_n[std::to_string(n)] = c;
  j["per_n"] = per_n;
  j["duplicates_rejected"] = summary.generation.duplicates_rejected;
  j["excluded_rejected"] = summary.generation.excluded_rejected;
  j["filter_rejections"] = summary.generation.counters.filter_rejections;
  j["step_retries"] = summary.generation.counters.step_retries;
  j["sample_restarts"] = summary.generation.counters.sample_restarts;
  j["wall_seconds"] = secs;
  j["samples_per_second"] = secs > 0 ? static_cast<double>(summary.count) / secs : 0.0;
  std::cout << j.dump(1) << "\n";
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string data;
  std::string puzzle;
  std::string response;
  std::string verdicts_out;
};

std::string verdict_text(const arith::Verdict& v) {
  if (v.accepted()) return "ACCEPT";
  std::string s = fmt::format("REJECT\t{}", arith::to_string(*v.failure));
  if (v.failing_step) s += fmt::format("\tstep={}", *v.failing_step);
  return s;
}

int run_verify(const VerifyArgs& a) {
  if (!a.puzzle.empty()) {
    auto puzzle = arith::parse_inline_puzzle(a.puzzle);
    if (!puzzle) throw ToolkitError(ErrorKind::Usage, fmt::format("malformed puzzle: {}", a.puzzle));
    std::cout << verdict_text(arith::verify_response(*puzzle, a.response)) << "\n";
    return kExitOk;
  }
  if (a.data.empty()) throw ToolkitError(ErrorKind::Usage, "verify needs --data or --puzzle");

  std::optional<std::ofstream> verdicts;
  if (!a.verdicts_out.empty()) verdicts = open_out(a.verdicts_out);
  std::uint64_t total = 0;
  std::uint64_t accepted = 0;
  std::map<std::string, std::uint64_t> reasons;
  arith::for_each_sample(a.data, [&](arith::SftSample&& s, std::uint64_t line_no) {
    auto puzzle = arith::parse_prompt(s.prompt);
    if (!puzzle) {
      throw ToolkitError(ErrorKind::Data, fmt::format("line {}: malformed prompt", line_no));
    }
    const auto v = arith::verify_response(*puzzle, s.response);
    ++total;
    if (v.accepted()) {
      ++accepted;
    } else {
      ++reasons[arith::to_string(*v.failure)];
    }
    if (verdicts) *verdicts << line_no << "\t" << verdict_text(v) << "\n";
  });

  nlohmann::ordered_json j;
  j["version"] = ARITH_VERSION;
  j["command"] = "verify";
  j["data"] = a.data;
  j["records"] = total;
  j["accepted"] = accepted;
  j["rejected"] = total - accepted;
  j["failures"] = reasons;
  std::cout << j.dump(1) << "\n";
  return kExitOk;
}

// ---- eval / diff ----

struct EvalArgs {
  std::string data;
  std::string responses;
  std::string join = "index";
  std::string format = "jsonl";
  std::string json_out;
  std::string table_out;
};

int run_eval(const EvalArgs& a) {
  const auto join = a.join == "prompt" ? arith::JoinMode::ByPrompt : arith::JoinMode::ByIndex;
  const auto format = a.format == "lines" ? arith::ResponseFormat::Lines : arith::ResponseFormat::Jsonl;
  const arith::EvalReport report = arith::evaluate_files(a.data, a.responses, join, format);
  const std::string table = report.to_table();
  std::cout << table;
  if (!a.json_out.empty()) open_out(a.json_out) << report.to_json();
  if (!a.table_out.empty()) open_out(a.table_out) << table;
  return kExitOk;
}

int run_diff(const std::string& a, const std::string& b) {
  const auto ra = arith::EvalReport::from_json(read_file(a));
  const auto rb = arith::EvalReport::from_json(read_file(b));
  std::cout << arith::diff_table(arith::diff_reports(ra, rb));
  return kExitOk;
}

// ---- solve ----

struct SolveArgs {
  std::string puzzle;
  std::string file;
  bool count_all = false;
  std::uint64_t budget = 100'000'000;
};

void solve_one(const arith::Puzzle& puzzle, const SolveArgs& a) {
  arith::SolveOptions opts;
  opts.mode = a.count_all ? arith::SolveMode::CountAll : arith::SolveMode::First;
  opts.node_budget = a.budget;
  const auto out = arith::solve(puzzle, opts);
  std::string line = arith::render_prompt(puzzle) + "\t";
  if (out.status == arith::SolveStatus::BudgetExceeded) {
    line += fmt::format("UNKNOWN(budget={})", a.budget);
  } else if (out.witness) {
    line += arith::render_trace(*out.witness);
  } else {
    line += "UNSOLVABLE";
  }
  if (out.solution_count) line += fmt::format("\tcount={}", *out.solution_count);
  line += fmt::format("\tnodes={}", out.nodes_explored);
  std::cout << line << "\n";
}

int run_solve(const SolveArgs& a) {
  if (!a.puzzle.empty()) {
    auto p = arith::parse_inline_puzzle(a.puzzle);
    if (!p) throw ToolkitError(ErrorKind::Usage, fmt::format("malformed puzzle: {}", a.puzzle));
    solve_one(*p, a);
    return kExitOk;
  }
  if (a.file.empty()) throw ToolkitError(ErrorKind::Usage, "solve needs a puzzle or --file");
  std::ifstream in(a.file);
  if (!in) throw ToolkitError(ErrorKind::Io, fmt::format("cannot open {}", a.file));
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto p = arith::parse_inline_puzzle(line);
    if (!p) throw ToolkitError(ErrorKind::Data, fmt::format("{}:{}: malformed puzzle", a.file, line_no));
    solve_one(*p, a);
  }
  return kExitOk;
}

// ---- stats ----

int run_stats(const std::string& data, const std::string& out) {
  const auto report = arith::compute_stats(data);
  if (out.empty()) {
    std::cout << report.to_json();
  } else {
    open_out(out) << report.to_json();
  }
  return kExitOk;
}

// ---- paper-suite ----

struct SuiteArgs {
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t train_count = 1'000'000;
  std::string train_size;
  unsigned shards = 8;
  unsigned threads = 0;
  bool no_exclude = false;
};

int run_suite(SuiteArgs a) {
  if (!a.train_size.empty()) {
    if (a.train_size == "1M") {
      a.train_count = 1'000'000;
    } else if (a.train_size == "10M") {
      a.train_count = 10'000'000;
    } else if (a.train_size == "100M") {
      a.train_count = 100'000'000;
    } else {
      throw ToolkitError(ErrorKind::Usage, "--train must be 1M, 10M or 100M");
    }
  }
  arith::SuiteOptions opts;
  opts.out_dir = a.out;
  opts.seed = a.seed;
  opts.train_count = a.train_count;
  opts.shards = a.shards;
  opts.threads = a.threads;
  opts.exclude_train = !a.no_exclude;

  const auto t0 = Clock::now();
  const auto result = arith::build_paper_suite(opts);
  nlohmann::ordered_json j;
  j["version"] = ARITH_VERSION;
  j["command"] = "paper-suite";
  j["config"] = {{"out", a.out},       {"seed", a.seed},         {"train_count", a.train_count},
                 {"shards", a.shards}, {"exclude_train", opts.exclude_train}};
  j["manifest"] = result.manifest.string();
  for (const auto& s : result.splits) j["splits"][s.split] = s.count;
  j["wall_seconds"] = seconds_since(t0);
  std::cout << j.dump(1) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetical puzzle toolkit: synthesis, verification, scoring"};
  app.set_version_flag("--version", std::string("arithpuzzle ") + ARITH_VERSION);
  app.require_subcommand(1);
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "Print the selected kernel variant to stderr");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a dataset split");
  gen_cmd->add_option("--count", gen.count, "Number of samples")->required();
  gen_cmd->add_option("--n", gen.n_values, "Comma-separated candidate counts")->delimiter(',');
  gen_cmd->add_option("--v", gen.v, "Upper bound V for candidates");
  gen_cmd->add_option("--seed", gen.seed, "Run seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output dataset file")->required();
  gen_cmd->add_option("--split", gen.split, "Split label stored in every record");
  gen_cmd->add_option("--require-range", gen.range, "lo,hi: require a candidate in (lo, hi)")
      ->delimiter(',')
      ->expected(2);
  gen_cmd->add_option("--exclude", gen.exclude, "Ledger file(s) whose keys must not be emitted");
  gen_cmd->add_option("--ledger-out", gen.ledger_out, "Write the emitted keys here");
  gen_cmd->add_option("--shards", gen.shards, "Shard count (part of the determinism key)");
  gen_cmd->add_option("--threads", gen.threads, "Worker threads (0 = all cores)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Verify reference responses or a single response");
  ver_cmd->add_option("--data", ver.data, "Dataset file");
  ver_cmd->add_option("--puzzle", ver.puzzle, "Inline puzzle, e.g. \"3,6,7,51,58:4\"");
  ver_cmd->add_option("--response", ver.response, "Response text for --puzzle");
  ver_cmd->add_option("--verdicts-out", ver.verdicts_out, "Per-line verdict file");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score a response file (pass@1)");
  eval_cmd->add_option("--data", ev.data, "Dataset file")->required();
  eval_cmd->add_option("--responses", ev.responses, "Response file")->required();
  eval_cmd->add_option("--join", ev.join, "index|prompt")->check(CLI::IsMember({"index", "prompt"}));
  eval_cmd->add_option("--format", ev.format, "jsonl|lines")->check(CLI::IsMember({"jsonl", "lines"}));
  eval_cmd->add_option("--json-out", ev.json_out, "Write the JSON report here");
  eval_cmd->add_option("--table-out", ev.table_out, "Write the text table here");

  std::string diff_a;
  std::string diff_b;
  auto* diff_cmd = app.add_subcommand("diff", "Compare two JSON eval reports");
  diff_cmd->add_option("a", diff_a, "Baseline report")->required();
  diff_cmd->add_option("b", diff_b, "Candidate report")->required();

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a puzzle by exhaustive search");
  solve_cmd->add_option("puzzle", sol.puzzle, "Inline puzzle, e.g. \"3,6,7,51,58:4\"");
  solve_cmd->add_option("--file", sol.file, "One puzzle per line");
  solve_cmd->add_flag("--count-all", sol.count_all, "Count every distinct solution trace");
  solve_cmd->add_option("--budget", sol.budget, "Node budget");

  std::string stats_data;
  std::string stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Histogram report for a dataset file");
  stats_cmd->add_option("--data", stats_data, "Dataset file")->required();
  stats_cmd->add_option("--out", stats_out, "Write the JSON report here (default stdout)");

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("paper-suite", "Build train + all test splits");
  suite_cmd->add_option("--out", suite.out, "Output directory")->required();
  suite_cmd->add_option("--seed", suite.seed, "Suite seed")->required();
  suite_cmd->add_option("--train", suite.train_size, "1M|10M|100M");
  suite_cmd->add_option("--train-count", suite.train_count, "Explicit training set size");
  suite_cmd->add_option("--shards", suite.shards, "Shard count (part of the determinism key)");
  suite_cmd->add_option("--threads", suite.threads, "Worker threads (0 = all cores)");
  suite_cmd->add_flag("--no-exclude", suite.no_exclude, "Do not exclude training keys from test splits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (verbosity > 0) {
    std::cerr << "kernels: " << arith::kernels::to_string(arith::kernels::active().isa) << "\n";
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*ver_cmd) return run_verify(ver);
    if (*eval_cmd) return run_eval(ev);
    if (*diff_cmd) return run_diff(diff_a, diff_b);
    if (*solve_cmd) return run_solve(sol);
    if (*stats_cmd) return run_stats(stats_data, stats_out);
    if (*suite_cmd) return run_suite(suite);
  } catch (const ToolkitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
