// Copyright 2026 The tbmq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TBMQ_ERRORS_HPP
#define TBMQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tbmq {

enum class ErrorCode {
  NegativeMass,
  SumNotOne,
  UnknownElement,
  FrameMismatch,
  FrameTooLarge,
  TotalConflict,
  ZeroContour,
  ArityMismatch,
  EmptyConditioningSet,
  NotAProductFrame,
  QubitOutOfRange,
  DuplicateQubit,
  EmptyControlSet,
  AncillaBudgetExceeded,
  NotAProductLayout,
  InvalidArgument,
  ParseError,
};

/// Domain error carrying a machine-checkable code next to the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tbmq

#endif  // TBMQ_ERRORS_HPP
