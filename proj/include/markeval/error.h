// Copyright 2026 The Markeval Authors. All Rights Reserved.
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

#ifndef MARKEVAL_ERROR_H_
#define MARKEVAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace markeval {

enum class ErrorCode {
  kMinSamples,
  kNonFinite,
  kDimensionMismatch,
  kDomainError,
  kUnknownEstimator,
  kDegenerateInput,
  kNumericalFailure,
  kFormatError,
  kRaggedRows,
  kEmptyFile,
  kIoError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command-line layer can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix carried by what().
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace markeval

#endif  // MARKEVAL_ERROR_H_
