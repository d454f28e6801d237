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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairvec/bias_metrics.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/gender_pairs.hpp"
#include "fairvec/linalg.hpp"
#include "fairvec/sgns.hpp"

namespace fairvec {

enum class LossForm { kAbsolute, kSquared };

// One summand |p(t|a) - p(t|b)| (or its square) of either loss. The negative
// draw is frozen and shared by both conditionals of the summand.
struct LossTerm {
  std::size_t target = 0;
  std::size_t context_a = 0;
  std::size_t context_b = 0;
  std::vector<std::size_t> negatives;
};

// Sparse gradient keyed by vocabulary row. With tied vectors every entry lives
// in `input`; `output` is used only for untied models.
struct Gradient {
  std::map<std::size_t, Vector> input;
  std::map<std::size_t, Vector> output;

  void add(const Gradient& other, double scale = 1.0);
  double squared_norm() const;
};

// p(t|c) = exp(sgns_log_prob(...)).
double term_value(const SgnsVectors& vectors, const LossTerm& term, LossForm form);
double terms_loss(const SgnsVectors& vectors, std::span<const LossTerm> terms,
                  LossForm form);

// Loss of `terms` plus its analytic gradient accumulated into `grad`. At the
// |.| kink the subgradient 0 is used.
double terms_loss_and_gradient(const SgnsVectors& vectors,
                               std::span<const LossTerm> terms, LossForm form,
                               Gradient& grad);

// Resolved (male, female) row indices of each pair.
using PairIndices = std::vector<std::pair<std::size_t, std::size_t>>;
PairIndices pair_indices(const EmbeddingSet& emb, const GenderPairSet& pairs);

std::vector<LossTerm> probabilistic_terms(std::size_t target, const PairIndices& pairs,
                                          NegativeSampler& sampler,
                                          std::size_t k_negatives);

// The `per_side` L1-nearest male-coded and female-coded words to `target`,
// each sorted nearest first (ties toward the lower index). The target itself
// is never selected.
struct NeighborSelection {
  std::vector<std::size_t> male;
  std::vector<std::size_t> female;
};
NeighborSelection nearest_biased_neighbors(const EmbeddingSet& emb, std::size_t target,
                                           const BiasedNeighborSets& sets,
                                           std::size_t per_side);

// Pairs the i-th nearest male with the i-th nearest female neighbor.
std::vector<LossTerm> nearest_neighbor_terms(std::size_t target,
                                             const NeighborSelection& neighbors,
                                             NegativeSampler& sampler,
                                             std::size_t k_negatives);

// Sum over targets and pairs of |p(t|a) - p(t|b)|. Throws Error(kMissingWord)
// naming every unresolved word.
double probabilistic_loss(const EmbeddingSet& emb, std::span<const std::string> targets,
                          const GenderPairSet& pairs, NegativeSampler& sampler,
                          const SgnsConfig& cfg, LossForm form = LossForm::kAbsolute);

// Sum over the k/2 rank-paired nearest neighbors of |p(t|m_i) - p(t|f_i)|.
double nn_loss(const EmbeddingSet& emb, std::string_view target,
               const BiasedNeighborSets& sets, std::size_t k, NegativeSampler& sampler,
               const SgnsConfig& cfg, LossForm form = LossForm::kAbsolute);

}  // namespace fairvec
