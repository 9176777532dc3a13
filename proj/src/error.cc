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

#include "markeval/error.h"

namespace markeval {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMinSamples: return "MinSamples";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kUnknownEstimator: return "UnknownEstimator";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace markeval
