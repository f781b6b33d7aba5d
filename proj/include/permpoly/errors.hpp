/* Copyright (C) 2026 The permpoly authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

enum class ErrorCode {
  NotPrime,
  Reducible,
  SizeLimitExceeded,
  MixedTowers,
  DivisionByZero,
  NotInSubfield,
  NotInvertible,
  IndexOutOfRange,
  DegenerateInstance,
  HypothesisViolation,
  GcdViolation,
  ZeroAlpha,
  ImageEscape,
  NotPermutationL,
  NotPermutationL1,
  NotSurjectiveF,
  NotTranslator,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode c) noexcept;

/// Library-wide exception type; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace permpoly
