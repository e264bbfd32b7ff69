// Copyright 2026 The SphereHull Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spherehull {

enum class ErrorCode {
  kEmptyInput,
  kInvalidArgument,
  kDegeneratePoint,
  kDegenerateTriangle,
  kInsufficientPoints,
  kDegenerateCloud,
  kBrokenHorizon,
  kUnknownIndex,
  kParseError,
  kIndexOutOfRange,
  kIoError,
  kValidationFailure,
};

const char* ToString(ErrorCode code);

class HullError : public std::runtime_error {
 public:
  HullError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the file readers; `line()` is 1-based.
class ParseError : public HullError {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : HullError(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spherehull
