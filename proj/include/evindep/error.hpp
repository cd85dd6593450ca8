// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVINDEP_ERROR_HPP_
#define EVINDEP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace evindep {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto evd_status values.
enum class ErrorCode {
  kNonUnitSum = 1,
  kNegativeMass,
  kDuplicateSubset,
  kSubsetOutOfRange,
  kFrameMismatch,
  kEmptyList,
  kEmptyConditioner,
  kFocalOutsideConditioner,
  kAlphaOutOfRange,
  kTotalConflict,
  kEmptyCluster,
  kTooFewObjects,
  kPartitionMismatch,
  kLengthMismatch,
  kNotADerangement,
  kInvalidFrame,
  kInvalidArgument,
  kParseError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evindep

#endif  // EVINDEP_ERROR_HPP_
