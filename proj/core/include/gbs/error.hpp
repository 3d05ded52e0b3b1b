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

#ifndef GBS_ERROR_HPP_
#define GBS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural problems with a graph, whether read from text or built in code.
class GraphError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kZeroIndex,
    kDuplicateId,
    kUndeclaredVertex,
    kDisconnected,
    kEmpty,
    kUnknownId,
  };

  GraphError(Kind kind, const std::string& what, std::size_t line = 0,
             std::size_t column = 0);

  Kind kind() const { return kind_; }
  // 1-based; 0 when the error did not come from text.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

const char* to_string(GraphError::Kind kind);

// A move whose preconditions do not hold on the graph it is applied to.
class MoveError : public Error {
 public:
  using Error::Error;
};

// Malformed move script.
class ScriptError : public Error {
 public:
  ScriptError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input beyond a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbs

#endif  // GBS_ERROR_HPP_
