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
#include <span>
#include <string>
#include <vector>

#include "fairvec/embedding_store.hpp"
#include "fairvec/gender_pairs.hpp"
#include "fairvec/linalg.hpp"

namespace fairvec {

// Four word lists of a WEAT test. `kind` is "baseline" or "gender"; for gender
// tests `gendered_sets` names which two lists hold gendered words ("XY" or
// "AB"). Both are metadata for candidate-list construction only.
struct WeatTest {
  std::string name;
  std::vector<std::string> x, y, a, b;
  std::string kind = "baseline";
  std::string gendered_sets;
};

// mean_{a in A} cos(w, a) - mean_{b in B} cos(w, b)
double weat_association(VectorView w, std::span<const VectorView> a,
                        std::span<const VectorView> b);

// Effect size over population standard deviation; it lies in [-2, 2] when
// |X| = |Y| and within 1/sqrt(p(1-p)), p = |X|/|X u Y|, otherwise. Out-of-vocabulary
// words are dropped with a warning. Throws Error(kMissingWord) when a list resolves to
// nothing and Error(kDegenerateTest) when the deviation is <= 1e-12.
double weat_effect_size(const EmbeddingSet& emb, const WeatTest& test);

// Signed v . b for a one-component relation.
double ripa(const EmbeddingSet& emb, const BiasSubspace& relation, std::string_view word);

struct ScoredWord {
  std::size_t index = 0;
  std::string word;
  double score = 0.0;  // signed projection onto the relation vector
};

struct BiasedNeighborSets {
  std::vector<ScoredWord> male;    // sorted by descending |score|
  std::vector<ScoredWord> female;  // sorted by descending |score|
  BiasSubspace relation;
};

// All vocabulary words except `excluded`, in vocabulary order.
std::vector<std::string> default_candidate_pool(const EmbeddingSet& emb,
                                                std::span<const std::string> excluded);

// Scores candidates by signed projection onto `relation` and keeps the
// n_biased/2 strongest on each side. The side holding more of the pairs' first
// (male) words is labeled male. Throws Error(kInsufficientCandidates) when a
// side has fewer than n_biased/2 words with nonzero projection.
BiasedNeighborSets extract_biased_neighbor_sets(const EmbeddingSet& emb,
                                                const BiasSubspace& relation,
                                                std::span<const std::string> candidates,
                                                const GenderPairSet& definitional,
                                                std::size_t n_biased = 1000);

// Fraction of male-coded words among the k cosine-nearest words of
// male u female (excluding `word` itself). Ties break toward the lower index.
double neighborhood_bias(const EmbeddingSet& emb, const BiasedNeighborSets& sets,
                         std::string_view word, std::size_t k = 100);

// mean |ripa| over words.
double mean_abs_ripa(const EmbeddingSet& emb, const BiasSubspace& relation,
                     std::span<const std::string> words);

// mean |0.5 - neighborhood_bias| over words; computed in parallel, reduced in
// word order.
double mean_neighborhood_deviation(const EmbeddingSet& emb,
                                   const BiasedNeighborSets& sets,
                                   std::span<const std::string> words, std::size_t k,
                                   std::size_t threads = 1);

}  // namespace fairvec
