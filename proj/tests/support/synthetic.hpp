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
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fairvec/benchmark.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/wordlists.hpp"

namespace fairvec::testing {

// Knobs for the planted-bias embedding. Every word vector is
//   content + side * strength * g
// where g is the planted unit bias direction (coordinate 0) and content lives
// in the remaining coordinates. Biased words and targets share topic centers;
// male and female biased words are mirror images across g.
struct SyntheticSpec {
  std::size_t vocab = 2000;
  std::size_t dim = 50;
  std::size_t pairs = 10;
  std::size_t biased_per_side = 500;
  std::size_t targets = 200;
  std::size_t topics = 5;
  double pair_strength = 1.0;
  double biased_strength = 0.6;
  double target_strength = 0.3;
  double noise = 0.5;
  // Fillers share the topical coordinates instead of having their own block.
  bool shared_filler_space = false;
  std::size_t similarity_rows = 300;
  std::uint64_t seed = 7;
};

struct SyntheticSuite {
  EmbeddingSet embedding;
  WordListBundle bundle;
  std::vector<std::string> targets;
  std::vector<std::string> male_biased;
  std::vector<std::string> female_biased;
  // Gold scores come from the content coordinates only.
  SimilarityDataset similarity;
};

SyntheticSuite make_synthetic_suite(const SyntheticSpec& spec = {});

// Writes the bundle files, the embedding (.vec) and the similarity dataset
// (similarity.txt) into `dir`.
void write_synthetic_suite(const SyntheticSuite& suite, const std::filesystem::path& dir);

}  // namespace fairvec::testing
