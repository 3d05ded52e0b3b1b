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

#include "gbs/error.hpp"

namespace gbs {

GraphError::GraphError(Kind kind, const std::string& what, std::size_t line,
                       std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::kSyntax:
      return "syntax error";
    case GraphError::Kind::kZeroIndex:
      return "zero index";
    case GraphError::Kind::kDuplicateId:
      return "duplicate id";
    case GraphError::Kind::kUndeclaredVertex:
      return "undeclared vertex";
    case GraphError::Kind::kDisconnected:
      return "disconnected graph";
    case GraphError::Kind::kEmpty:
      return "empty graph";
    case GraphError::Kind::kUnknownId:
      return "unknown id";
  }
  return "graph error";
}

ScriptError::ScriptError(const std::string& what, std::size_t line)
    : Error("script line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace gbs
