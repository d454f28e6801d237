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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvec/embedding_store.hpp"

namespace fairvec {

struct SimilarityRow {
  std::string word1;
  std::string word2;
  double score = 0.0;
};

struct SimilarityDataset {
  std::string name;
  std::vector<SimilarityRow> rows;
};

// "word1 word2 score" per line (tabs or spaces); '#' lines are comments.
SimilarityDataset parse_similarity_dataset(std::istream& in, std::string name);
// Dataset name defaults to the file stem.
SimilarityDataset load_similarity_dataset(const std::filesystem::path& path);

// Spearman rank correlation with tie-averaged ranks. Throws
// Error(kUndefinedCorrelation) if either side is constant.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Tie-averaged 1-based ranks.
std::vector<double> average_ranks(std::span<const double> values);

struct BenchmarkResult {
  double score = 0.0;
  double coverage = 0.0;
  std::size_t covered = 0;
  std::size_t total = 0;
};

// Spearman between human scores and cosine similarity over in-vocabulary pairs.
// Throws Error(kInsufficientCoverage) below two covered pairs.
BenchmarkResult evaluate(const EmbeddingSet& emb, const SimilarityDataset& dataset);

}  // namespace fairvec
