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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairvec {

class EmbeddingSet;

// Ordered definitional pairs. By convention the first word of each pair is the
// male-coded one; socially-biased set extraction relies on this to orient the
// relation vector.
struct GenderPairSet {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool empty() const noexcept { return pairs.empty(); }
  std::size_t size() const noexcept { return pairs.size(); }

  // Every word of every pair, first words first within each pair.
  std::vector<std::string> words() const;

  // Throws Error(kInvalidArgument) if empty, if a pair repeats a word, or if
  // any word occurs in two pairs.
  void validate() const;
};

// One pair per line, two whitespace-separated words; '#' starts a comment.
GenderPairSet parse_gender_pairs(std::istream& in, std::string_view source = "<stream>");
GenderPairSet load_gender_pairs(const std::filesystem::path& path);

// Drops pairs with an out-of-vocabulary word (with a warning). Throws
// Error(kMissingWord) if nothing is left.
GenderPairSet resolve_pairs(const GenderPairSet& pairs, const EmbeddingSet& emb);

}  // namespace fairvec
