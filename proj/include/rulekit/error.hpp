// Copyright 2026, The rulekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RULEKIT_ERROR_HPP
#define RULEKIT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rulekit {

// Data-level failures that callers are expected to catch and report.
// Programming errors (violated function contracts) throw
// std::invalid_argument instead.
enum class ErrorKind {
  kMalformedLine,
  kDuplicateItemInTransaction,
  kDuplicateRespondent,
  kUnknownItem,
  kEmptyDatabase,
  kUndefinedConfidence,
  kUndefinedCosine,
  kUndefinedLift,
  kUnknownMeasure,
  kInvalidRule,
  kOutOfRange,
  kInvalidSpec,
  kUniverseTooLarge,
  kUnsupportedFormat,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }

  // 1-based input line for parse errors, empty otherwise.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace rulekit

#endif  // RULEKIT_ERROR_HPP
