// Copyright 2026 The Authors.
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

#ifndef IMCSN_ERROR_H_
#define IMCSN_ERROR_H_

#include <stdexcept>
#include <string>

namespace imcsn {

enum class ErrorCode {
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kProbabilityOutOfRange,
  kInvalidArgument,
  kUnknownNode,
  kBudgetViolation,
  kEdgeNotInParent,
  kDuplicateInsert,
  kNotAMember,
  kDegenerateGraph,
  kConstantIntimacy,
  kUnreachable,
  kPoolTooSmall,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; code() lets callers and tests
// tell the failure kinds apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Input-format failure with the 1-based line number where it occurred.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace imcsn

#endif  // IMCSN_ERROR_H_
