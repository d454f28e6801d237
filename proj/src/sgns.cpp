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

#include "fairvec/sgns.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fairvec/diagnostics.hpp"
#include "fairvec/error.hpp"
#include "fairvec/linalg.hpp"

namespace fairvec {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_same_vocab(const SgnsVectors& v) {
  if (v.input == nullptr || v.output == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "SGNS vectors not set");
  }
  if (!v.is_tied() && (v.input->size() != v.output->size() ||
                       v.input->dim() != v.output->dim())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input and output vectors must share vocabulary and dimension");
  }
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double exact_log_conditional(const EmbeddingSet& emb, std::size_t target,
                             std::size_t context) {
  const VectorView c = emb.row(context);
  std::vector<double> logits(emb.size());
  double max_logit = -INFINITY;
  for (std::size_t w = 0; w < emb.size(); ++w) {
    logits[w] = dot(emb.row(w), c);
    max_logit = std::max(max_logit, logits[w]);
  }
  double z = 0.0;
  for (double l : logits) z += std::exp(l - max_logit);
  return logits.at(target) - (max_logit + std::log(z));
}

double exact_log_conditional(const EmbeddingSet& emb, std::string_view target,
                             std::string_view context) {
  return exact_log_conditional(emb, emb.index_of(target), emb.index_of(context));
}

NegativeSampler NegativeSampler::from_frequencies(std::span<const double> frequencies,
                                                  std::uint64_t seed) {
  if (frequencies.empty()) {
    throw Error(ErrorCode::kEmptyEmbedding, "negative sampler needs a vocabulary");
  }
  NegativeSampler s;
  s.prob_.resize(frequencies.size());
  double total = 0.0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (!(frequencies[i] > 0.0) || !std::isfinite(frequencies[i])) {
      throw Error(ErrorCode::kInvalidArgument, "word frequencies must be positive");
    }
    s.prob_[i] = std::pow(frequencies[i], 0.75);
    total += s.prob_[i];
  }
  s.cdf_.resize(s.prob_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.prob_.size(); ++i) {
    s.prob_[i] /= total;
    acc += s.prob_[i];
    s.cdf_[i] = acc;
  }
  s.cdf_.back() = 1.0;
  s.reseed(seed);
  return s;
}

void NegativeSampler::reseed(std::uint64_t seed) {
  seed_ = seed;
  rng_.seed(seed);
}

std::size_t NegativeSampler::draw() {
  const double u = uniform01(rng_);
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

std::size_t NegativeSampler::draw_excluding(std::size_t excluded) {
  if (size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot draw a negative distinct from the target in a one-word vocabulary");
  }
  for (;;) {
    const std::size_t i = draw();
    if (i != excluded) return i;
  }
}

std::vector<std::size_t> NegativeSampler::draw_negatives(std::size_t k,
                                                         std::size_t excluded) {
  std::vector<std::size_t> out(k);
  for (auto& i : out) i = draw_excluding(excluded);
  return out;
}

NegativeSampler build_rank_sampler(const EmbeddingSet& emb, std::uint64_t seed) {
  std::vector<double> f(emb.size());
  for (std::size_t r = 0; r < f.size(); ++r) f[r] = 1.0 / static_cast<double>(r + 1);
  return NegativeSampler::from_frequencies(f, seed);
}

FrequencyTable load_frequency_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    double count = 0.0;
    std::string extra;
    if (!(ls >> count) || (ls >> extra) || !(count > 0.0)) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_no) +
                                         ": expected 'word count' with count > 0");
    }
    table.emplace(word, count);
  }
  return table;
}

NegativeSampler build_frequency_sampler(const EmbeddingSet& emb,
                                        const FrequencyTable& table, std::uint64_t seed) {
  std::vector<double> f(emb.size(), 1.0);
  std::size_t missing = 0;
  for (std::size_t i = 0; i < emb.size(); ++i) {
    if (auto it = table.find(emb.word(i)); it != table.end()) {
      f[i] = it->second;
    } else {
      ++missing;
    }
  }
  if (missing > 0) {
    warn(std::to_string(missing) + " vocabulary words missing from the frequency "
         "table; using count 1");
  }
  return NegativeSampler::from_frequencies(f, seed);
}

void SgnsConfig::validate() const {
  if (k_negatives < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k_negatives must be >= 1");
  }
}

double sgns_log_prob(const SgnsVectors& vectors, std::size_t target,
                     std::size_t context, std::span<const std::size_t> negatives) {
  const VectorView c = vectors.input->row(context);
  double s = log_sigmoid(dot(vectors.output->row(target), c));
  for (std::size_t n : negatives) s += log_sigmoid(-dot(vectors.output->row(n), c));
  return s;
}

double sgns_log_prob_estimate(const SgnsVectors& vectors, std::string_view target,
                              std::string_view context, NegativeSampler& sampler,
                              const SgnsConfig& cfg) {
  cfg.validate();
  check_same_vocab(vectors);
  if (sampler.size() != vectors.input->size()) {
    throw Error(ErrorCode::kInvalidArgument, "sampler vocabulary size differs from embedding");
  }
  const std::size_t t = vectors.input->index_of(target);
  const std::size_t c = vectors.input->index_of(context);
  const auto negatives = sampler.draw_negatives(cfg.k_negatives, t);
  return sgns_log_prob(vectors, t, c, negatives);
}

double sgns_log_prob_estimate(const EmbeddingSet& emb, std::string_view target,
                              std::string_view context, NegativeSampler& sampler,
                              const SgnsConfig& cfg) {
  if (!cfg.tie_inputs_outputs) {
    throw Error(ErrorCode::kInvalidArgument,
                "untied SGNS needs separate output vectors");
  }
  return sgns_log_prob_estimate(SgnsVectors::tied(emb), target, context, sampler, cfg);
}

}  // namespace fairvec
