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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairvec/embedding_store.hpp"

namespace fairvec {

double sigmoid(double x);
// log(sigmoid(x)) without overflow for large |x|.
double log_sigmoid(double x);

// Full-softmax log p(target | context) with tied vectors:
// v_t . v_c - log sum_w exp(v_w . v_c).
double exact_log_conditional(const EmbeddingSet& emb, std::size_t target,
                             std::size_t context);
double exact_log_conditional(const EmbeddingSet& emb, std::string_view target,
                             std::string_view context);

// Draws vocabulary indices with probability proportional to freq^(3/4).
// Owns its RNG; copies continue the same stream independently, which is how a
// caller freezes a negative draw.
class NegativeSampler {
 public:
  static NegativeSampler from_frequencies(std::span<const double> frequencies,
                                          std::uint64_t seed);

  std::size_t size() const noexcept { return prob_.size(); }
  double probability(std::size_t index) const { return prob_.at(index); }
  std::uint64_t seed() const noexcept { return seed_; }

  void reseed(std::uint64_t seed);
  std::size_t draw();
  // Resamples until the draw differs from `excluded`.
  std::size_t draw_excluding(std::size_t excluded);
  std::vector<std::size_t> draw_negatives(std::size_t k, std::size_t excluded);

 private:
  std::vector<double> prob_;
  std::vector<double> cdf_;
  std::mt19937_64 rng_;
  std::uint64_t seed_ = 0;
};

// Zipf rank proxy: vocabulary order is frequency order, f(rank) = 1/(rank+1).
NegativeSampler build_rank_sampler(const EmbeddingSet& emb, std::uint64_t seed);

using FrequencyTable = std::unordered_map<std::string, double>;

// "word count" per line; '#' comments allowed.
FrequencyTable load_frequency_table(const std::filesystem::path& path);

// Vocabulary words missing from the table get a count of 1.
NegativeSampler build_frequency_sampler(const EmbeddingSet& emb,
                                        const FrequencyTable& table, std::uint64_t seed);

struct SgnsConfig {
  std::size_t k_negatives = 5;
  bool tie_inputs_outputs = true;

  void validate() const;
};

// Input (v) and output (v') vectors over one vocabulary. Pre-trained releases
// ship a single matrix, in which case both point at it.
struct SgnsVectors {
  const EmbeddingSet* input = nullptr;
  const EmbeddingSet* output = nullptr;

  static SgnsVectors tied(const EmbeddingSet& emb) { return {&emb, &emb}; }
  bool is_tied() const noexcept { return input == output; }
};

// log sigma(v'_t . v_c) + sum_i log sigma(-v'_{n_i} . v_c) for a given draw.
double sgns_log_prob(const SgnsVectors& vectors, std::size_t target,
                     std::size_t context, std::span<const std::size_t> negatives);

// Same estimate with cfg.k_negatives fresh negatives (never the target).
double sgns_log_prob_estimate(const SgnsVectors& vectors, std::string_view target,
                              std::string_view context, NegativeSampler& sampler,
                              const SgnsConfig& cfg);
// Tied-vector convenience; Error(kInvalidArgument) if cfg asks for untied.
double sgns_log_prob_estimate(const EmbeddingSet& emb, std::string_view target,
                              std::string_view context, NegativeSampler& sampler,
                              const SgnsConfig& cfg);

}  // namespace fairvec
