// Copyright 2026 The fairvec Authors.
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

#include <stdexcept>
#include <string>

namespace fairvec {

// Numeric values are part of the C ABI (see fairvec.h); append only.
enum class ErrorCode : int {
  kIo = 1,
  kParse = 2,
  kDimensionMismatch = 3,
  kEmptyEmbedding = 4,
  kDomain = 5,
  kRank = 6,
  kMissingWord = 7,
  kDegenerateTest = 8,
  kInsufficientCandidates = 9,
  kInsufficientCoverage = 10,
  kUndefinedCorrelation = 11,
  kDivergence = 12,
  kInvalidArgument = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairvec
