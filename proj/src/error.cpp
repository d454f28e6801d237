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

#include "fairvec/error.hpp"

namespace fairvec {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kEmptyEmbedding: return "empty-embedding";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kRank: return "rank";
    case ErrorCode::kMissingWord: return "missing-word";
    case ErrorCode::kDegenerateTest: return "degenerate-test";
    case ErrorCode::kInsufficientCandidates: return "insufficient-candidates";
    case ErrorCode::kInsufficientCoverage: return "insufficient-coverage";
    case ErrorCode::kUndefinedCorrelation: return "undefined-correlation";
    case ErrorCode::kDivergence: return "divergence";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace fairvec
