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

#include "arith/kernels.hpp"

namespace arith::kernels {
namespace {

std::size_t first_illegal_scalar(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_trace_byte(static_cast<unsigned char>(text[i]))) return i;
  }
  return text.size();
}

std::size_t count_byte_scalar(std::string_view text, char needle) {
  std::size_t n = 0;
  for (char c : text) n += (c == needle);
  return n;
}

constexpr KernelTable kScalar{Isa::Scalar, first_illegal_scalar, count_byte_scalar};

}  // namespace

const KernelTable* detail::scalar_table() { return &kScalar; }

}  // namespace arith::kernels
