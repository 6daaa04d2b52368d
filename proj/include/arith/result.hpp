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

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace arith {

// Carries an error value into a Result without ambiguity when T and E are
// mutually convertible.
template <class E>
struct Fail {
  E error;
};
template <class E>
Fail(E) -> Fail<E>;

// Value-or-error return for the hot-path domain operations. Operational
// failures (files, joins, configuration) are reported with ToolkitError.
template <class T, class E>
class Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  Result(Fail<E> f) : state_(std::in_place_index<1>, std::move(f.error)) {}

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<0>(state_); }
  T& value() & { return std::get<0>(state_); }
  T&& value() && { return std::get<0>(std::move(state_)); }
  const E& error() const { return std::get<1>(state_); }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

 private:
  std::variant<T, E> state_;
};

enum class ErrorKind {
  Usage,          // bad flags or invalid configuration
  Data,           // malformed input records
  Io,             // unreadable/unwritable files
  JoinMismatch,   // eval join could not be formed
  RowKeyMismatch, // report diff over different row sets
};

class ToolkitError : public std::runtime_error {
 public:
  ToolkitError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arith
