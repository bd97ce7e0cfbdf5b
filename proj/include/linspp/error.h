// Copyright 2026 The linspp Authors.
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

#ifndef LINSPP_ERROR_H_
#define LINSPP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace linspp {

enum class ErrorCode {
  kCycleDetected,
  kSourceEqualsSink,
  kDanglingVertexReference,
  kNoStPath,
  kVertexUnreachable,
  kSourceHasNoNonbasicPath,
  kTooManyPaths,
  kTooManySystems,
  kUnknownArc,
  kOrderMismatch,
  kNotStronglyBasic,
  kPropertyPiViolated,
  kNotLinearizable,
  kDimensionMismatch,
  kParseError,
  kDuplicateCostKey,
  kArcIdOutOfRange,
  kUnsupportedParams,
  kIoError,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// failure kind and `what()` carries a human-readable description.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the file reader; `line()` is 1-based, or 0 when not tied to a
// particular line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace linspp

#endif  // LINSPP_ERROR_H_
