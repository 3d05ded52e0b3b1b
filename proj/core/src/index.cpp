// Copyright 2026 The gbsdeform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbs/index.hpp"

#include <cctype>

namespace gbs {

bool parse_index(std::string_view text, Index& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) return false;
  Index value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? Index(-value) : value;
  return true;
}

Index gcd_index(const Index& a, const Index& b) {
  Index x = abs_index(a);
  Index y = abs_index(b);
  while (y != 0) {
    Index t = x % y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace gbs
