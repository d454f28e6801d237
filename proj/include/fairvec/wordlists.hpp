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
#include <vector>

#include "fairvec/bias_metrics.hpp"
#include "fairvec/gender_pairs.hpp"

namespace fairvec {

// File names inside a bundle directory.
inline constexpr const char* kGenderPairsFile = "gender_pairs.txt";
inline constexpr const char* kWeatTestsFile = "weat_tests.txt";
inline constexpr const char* kProfessionsFile = "professions.txt";
inline constexpr const char* kGenderedWordsFile = "gendered_words.txt";

struct WordListBundle {
  GenderPairSet gender_pairs;
  std::vector<WeatTest> weat_tests;
  std::vector<std::string> professions;
  std::vector<std::string> gendered_words;
  // Gender-neutral debias targets: the non-gendered lists of the gender WEAT
  // tests plus professions, deduplicated in first-seen order, minus every
  // gendered list word, pair word, and explicitly gendered word.
  std::vector<std::string> candidates;

  // Words of the gendered lists of every gender WEAT test.
  std::vector<std::string> gender_attribute_words() const;
  // Pair words plus gender attribute words; excluded from socially-biased pools.
  std::vector<std::string> definitional_words() const;
};

// Parses "[name]" blocks with "kind:", optional "gendered:", and "X:", "Y:",
// "A:", "B:" lines. Throws Error(kParse) with file:line on malformed blocks.
std::vector<WeatTest> parse_weat_tests(std::istream& in, std::string_view source = "<stream>");

// One word per line; '#' comments and blank lines ignored.
std::vector<std::string> parse_word_list(std::istream& in);

// `include_baseline_targets` adds the X/Y lists of baseline tests to the
// candidate list.
WordListBundle load_bundle(const std::filesystem::path& directory,
                           bool include_baseline_targets = false);

std::vector<std::string> build_candidates(const WordListBundle& bundle,
                                          bool include_baseline_targets);

}  // namespace fairvec
