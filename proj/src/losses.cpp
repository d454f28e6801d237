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

#include "fairvec/losses.hpp"

#include <algorithm>
#include <cmath>

#include "fairvec/error.hpp"

namespace fairvec {
namespace {

void axpy(std::map<std::size_t, Vector>& rows, std::size_t index, double a,
          VectorView x) {
  auto [it, inserted] = rows.try_emplace(index);
  if (inserted) it->second.assign(x.size(), 0.0);
  Vector& g = it->second;
  for (std::size_t j = 0; j < x.size(); ++j) g[j] += a * x[j];
}

// Adds weight * d/dtheta log p(target | context) to grad.
void add_log_prob_gradient(const SgnsVectors& v, std::size_t target,
                           std::size_t context, std::span<const std::size_t> negatives,
                           double weight, Gradient& grad) {
  auto& out_rows = v.is_tied() ? grad.input : grad.output;
  const VectorView c = v.input->row(context);
  const VectorView t = v.output->row(target);
  const double pos = sigmoid(-dot(t, c));
  axpy(grad.input, context, weight * pos, t);
  axpy(out_rows, target, weight * pos, c);
  for (std::size_t n : negatives) {
    const VectorView o = v.output->row(n);
    const double neg = sigmoid(dot(o, c));
    axpy(grad.input, context, -weight * neg, o);
    axpy(out_rows, n, -weight * neg, c);
  }
}

void check_k(std::size_t k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "neighbor k must be even and >= 2");
  }
}

}  // namespace

void Gradient::add(const Gradient& other, double scale) {
  for (const auto& [i, g] : other.input) axpy(input, i, scale, g);
  for (const auto& [i, g] : other.output) axpy(output, i, scale, g);
}

double Gradient::squared_norm() const {
  double s = 0.0;
  for (const auto* rows : {&input, &output}) {
    for (const auto& [i, g] : *rows) s += dot(g, g);
  }
  return s;
}

double term_value(const SgnsVectors& vectors, const LossTerm& term, LossForm form) {
  const double pa = std::exp(sgns_log_prob(vectors, term.target, term.context_a, term.negatives));
  const double pb = std::exp(sgns_log_prob(vectors, term.target, term.context_b, term.negatives));
  const double diff = pa - pb;
  return form == LossForm::kAbsolute ? std::abs(diff) : diff * diff;
}

double terms_loss(const SgnsVectors& vectors, std::span<const LossTerm> terms,
                  LossForm form) {
  double s = 0.0;
  for (const LossTerm& t : terms) s += term_value(vectors, t, form);
  return s;
}

double terms_loss_and_gradient(const SgnsVectors& vectors,
                               std::span<const LossTerm> terms, LossForm form,
                               Gradient& grad) {
  double loss = 0.0;
  for (const LossTerm& t : terms) {
    const double pa = std::exp(sgns_log_prob(vectors, t.target, t.context_a, t.negatives));
    const double pb = std::exp(sgns_log_prob(vectors, t.target, t.context_b, t.negatives));
    const double diff = pa - pb;
    double coeff = 0.0;
    if (form == LossForm::kAbsolute) {
      loss += std::abs(diff);
      coeff = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
    } else {
      loss += diff * diff;
      coeff = 2.0 * diff;
    }
    if (coeff == 0.0) continue;
    // d p = p * d log p
    add_log_prob_gradient(vectors, t.target, t.context_a, t.negatives, coeff * pa, grad);
    add_log_prob_gradient(vectors, t.target, t.context_b, t.negatives, -coeff * pb, grad);
  }
  return loss;
}

PairIndices pair_indices(const EmbeddingSet& emb, const GenderPairSet& pairs) {
  PairIndices out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs.pairs) out.emplace_back(emb.index_of(a), emb.index_of(b));
  return out;
}

std::vector<LossTerm> probabilistic_terms(std::size_t target, const PairIndices& pairs,
                                          NegativeSampler& sampler,
                                          std::size_t k_negatives) {
  std::vector<LossTerm> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    out.push_back({target, a, b, sampler.draw_negatives(k_negatives, target)});
  }
  return out;
}

NeighborSelection nearest_biased_neighbors(const EmbeddingSet& emb, std::size_t target,
                                           const BiasedNeighborSets& sets,
                                           std::size_t per_side) {
  const VectorView t = emb.row(target);
  auto nearest = [&](const std::vector<ScoredWord>& side) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(side.size());
    for (const ScoredWord& w : side) {
      if (w.index != target) dist.emplace_back(l1_distance(t, emb.row(w.index)), w.index);
    }
    if (dist.size() < per_side) {
      throw Error(ErrorCode::kInsufficientCandidates,
                  "not enough socially-biased words for " + std::to_string(per_side) +
                      " neighbors per side");
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(per_side),
                      dist.end());
    std::vector<std::size_t> out(per_side);
    for (std::size_t i = 0; i < per_side; ++i) out[i] = dist[i].second;
    return out;
  };
  return {nearest(sets.male), nearest(sets.female)};
}

std::vector<LossTerm> nearest_neighbor_terms(std::size_t target,
                                             const NeighborSelection& neighbors,
                                             NegativeSampler& sampler,
                                             std::size_t k_negatives) {
  const std::size_t n = std::min(neighbors.male.size(), neighbors.female.size());
  std::vector<LossTerm> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({target, neighbors.male[i], neighbors.female[i],
                   sampler.draw_negatives(k_negatives, target)});
  }
  return out;
}

double probabilistic_loss(const EmbeddingSet& emb, std::span<const std::string> targets,
                          const GenderPairSet& pairs, NegativeSampler& sampler,
                          const SgnsConfig& cfg, LossForm form) {
  cfg.validate();
  if (!cfg.tie_inputs_outputs) {
    throw Error(ErrorCode::kInvalidArgument, "untied SGNS needs separate output vectors");
  }
  std::string missing;
  auto note = [&](const std::string& w) {
    if (!emb.contains(w)) missing += (missing.empty() ? "" : ", ") + w;
  };
  for (const std::string& t : targets) note(t);
  for (const auto& [a, b] : pairs.pairs) {
    note(a);
    note(b);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingWord, "words not in vocabulary: " + missing);
  }
  const PairIndices pi = pair_indices(emb, pairs);
  const SgnsVectors vectors = SgnsVectors::tied(emb);
  double loss = 0.0;
  for (const std::string& t : targets) {
    const auto terms = probabilistic_terms(emb.index_of(t), pi, sampler, cfg.k_negatives);
    loss += terms_loss(vectors, terms, form);
  }
  return loss;
}

double nn_loss(const EmbeddingSet& emb, std::string_view target,
               const BiasedNeighborSets& sets, std::size_t k, NegativeSampler& sampler,
               const SgnsConfig& cfg, LossForm form) {
  cfg.validate();
  check_k(k);
  if (!cfg.tie_inputs_outputs) {
    throw Error(ErrorCode::kInvalidArgument, "untied SGNS needs separate output vectors");
  }
  const std::size_t t = emb.index_of(target);
  const auto neighbors = nearest_biased_neighbors(emb, t, sets, k / 2);
  const auto terms = nearest_neighbor_terms(t, neighbors, sampler, cfg.k_negatives);
  return terms_loss(SgnsVectors::tied(emb), terms, form);
}

}  // namespace fairvec
