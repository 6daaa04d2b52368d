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

#include "arith/solver.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "arith/verify.hpp"

namespace arith {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solvable: return "SOLVABLE";
    case SolveStatus::Unsolvable: return "UNSOLVABLE";
    case SolveStatus::BudgetExceeded: return "UNKNOWN";
  }
  return "?";
}

namespace {

struct BudgetExhausted {};

class Search {
 public:
  Search(Value target, const SolveOptions& opts) : target_(target), opts_(opts) {}

  // Returns true once a witness is found in First mode.
  bool visit(std::vector<Value>& live) {
    if (++nodes_ > opts_.node_budget) throw BudgetExhausted{};
    if (live.size() == 1) {
      if (live[0] != target_) return false;
      ++count_;
      if (!witness_) witness_ = path_;
      return opts_.mode == SolveMode::First;
    }
    if (opts_.mode == SolveMode::First) {
      std::vector<Value> key = live;
      std::sort(key.begin(), key.end());
      if (failed_.contains(key)) return false;
      if (expand(live)) return true;
      failed_.insert(std::move(key));
      return false;
    }
    expand(live);
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t count() const { return count_; }
  const std::optional<std::vector<Step>>& witness() const { return witness_; }

 private:
  bool expand(std::vector<Value>& live) {
    const std::size_t k = live.size();
    std::vector<std::pair<Value, Value>> tried;
    tried.reserve(k * (k - 1));
    std::vector<Value> child;
    child.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const std::pair<Value, Value> operands{live[i], live[j]};
        if (std::find(tried.begin(), tried.end(), operands) != tried.end()) continue;
        tried.push_back(operands);

        child.clear();
        for (std::size_t m = 0; m < k; ++m) {
          if (m != i && m != j) child.push_back(live[m]);
        }
        child.push_back(0);
        for (Op op : kAllOps) {
          auto c = apply(live[i], op, live[j]);
          if (!c) continue;
          child.back() = *c;
          path_.push_back(Step{live[i], op, live[j], *c});
          std::vector<Value> next = child;
          const bool done = visit(next);
          path_.pop_back();
          if (done) return true;
        }
      }
    }
    return false;
  }

  Value target_;
  SolveOptions opts_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Step> path_;
  std::optional<std::vector<Step>> witness_;
  absl::flat_hash_set<std::vector<Value>> failed_;
};

}  // namespace

SolveOutcome solve(const Puzzle& puzzle, const SolveOptions& options) {
  SolveOutcome out;
  if (puzzle.candidates.empty()) return out;

  Search search(puzzle.target, options);
  std::vector<Value> live = puzzle.candidates;
  try {
    search.visit(live);
  } catch (const BudgetExhausted&) {
    out.status = SolveStatus::BudgetExceeded;
    out.nodes_explored = search.nodes() - 1;
    return out;
  }
  out.nodes_explored = search.nodes();
  if (search.witness()) {
    out.status = SolveStatus::Solvable;
    out.witness = SolutionTrace{*search.witness()};
  }
  if (options.mode == SolveMode::CountAll) out.solution_count = search.count();
  return out;
}

namespace {

void enumerate_all(std::vector<Value> live, std::string prefix, Value target,
                   std::set<std::string>& found, std::uint64_t& nodes) {
  ++nodes;
  if (live.size() == 1) {
    if (live[0] == target) found.insert(prefix);
    return;
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (i == j) continue;
      for (Op op : kAllOps) {
        auto c = apply(live[i], op, live[j]);
        if (!c) continue;
        std::vector<Value> next;
        for (std::size_t m = 0; m < live.size(); ++m) {
          if (m != i && m != j) next.push_back(live[m]);
        }
        next.push_back(*c);
        std::string text = prefix;
        if (!text.empty()) text += ", ";
        append_step(text, Step{live[i], op, live[j], *c});
        enumerate_all(std::move(next), std::move(text), target, found, nodes);
      }
    }
  }
}

}  // namespace

Result<SolveOutcome, NaiveError> naive_enumerate(const Puzzle& puzzle) {
  if (puzzle.candidates.size() > kNaiveMaxCandidates) return Fail{NaiveError::RefusedTooLarge};
  SolveOutcome out;
  if (puzzle.candidates.empty()) return out;

  std::set<std::string> found;
  enumerate_all(puzzle.candidates, std::string(), puzzle.target, found, out.nodes_explored);
  out.solution_count = found.size();
  if (!found.empty()) {
    out.status = SolveStatus::Solvable;
    auto trace = parse_trace(*found.begin());
    out.witness = trace ? *trace : SolutionTrace{};
  }
  return out;
}

}  // namespace arith
