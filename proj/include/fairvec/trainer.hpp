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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairvec/bias_metrics.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/error.hpp"
#include "fairvec/gender_pairs.hpp"
#include "fairvec/losses.hpp"
#include "fairvec/sgns.hpp"

namespace fairvec {

enum class Method { kProbabilistic, kNearestNeighbor, kComposite };

const char* method_name(Method m) noexcept;
// Accepts "probabilistic"/"prob", "nearest-neighbor"/"knn", "composite".
Method parse_method(std::string_view name);

struct TrainConfig {
  Method method = Method::kProbabilistic;
  std::size_t iterations = 1000;  // 0 runs evaluation only
  std::size_t batch_size = 64;
  double learning_rate = 0.01;
  std::size_t neighbor_k = 10;
  std::size_t eval_every = 100;
  double early_stop_drop = 0.05;
  std::uint64_t seed = 0;
  LossForm loss_form = LossForm::kAbsolute;
  SgnsConfig sgns;
  std::size_t threads = 1;

  void validate() const;
};

struct NamedValue {
  std::string name;
  double value = 0.0;
};

struct CheckpointRecord {
  std::string phase;
  std::size_t iteration = 0;
  double loss = 0.0;
  std::vector<NamedValue> metrics;
  std::vector<NamedValue> benchmarks;
};

enum class StopReason { kCompleted, kEarlyStop, kDiverged };

struct TrainReport {
  std::vector<CheckpointRecord> records;
  StopReason stop_reason = StopReason::kCompleted;
  std::string diagnostic;

  // One JSON object per checkpoint followed by a summary line.
  std::string to_jsonl() const;
};

using EvalFn = std::function<std::vector<NamedValue>(const EmbeddingSet&)>;

struct TrainInputs {
  std::vector<std::string> targets;
  GenderPairSet pairs;
  // Frozen socially-biased pools; required by the nearest-neighbor phase.
  std::optional<BiasedNeighborSets> neighbor_sets;
  // Negative sampler prototype; the rank-proxy sampler when unset.
  std::optional<NegativeSampler> sampler;
  // Separate v' vectors when cfg.sgns.tie_inputs_outputs is false.
  std::optional<EmbeddingSet> output_vectors;
  EvalFn metrics;
  EvalFn benchmarks;
};

struct TrainResult {
  EmbeddingSet embedding;
  std::optional<EmbeddingSet> output_vectors;
  TrainReport report;
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, TrainReport report)
      : Error(ErrorCode::kDivergence, what), report_(std::move(report)) {}
  const TrainReport& report() const noexcept { return report_; }

 private:
  TrainReport report_;
};

// row -= learning_rate * gradient for every row present in `grad`.
void sgd_step(EmbeddingSet& input, EmbeddingSet* output, const Gradient& grad,
              double learning_rate);

// Loss of one phase over every target, with the negative draw taken from a
// copy of `sampler` so repeated calls see identical negatives.
double full_loss(Method phase, const SgnsVectors& vectors, const TrainInputs& inputs,
                 const TrainConfig& cfg, const NegativeSampler& sampler);

// Plain SGD over batches of targets drawn uniformly with replacement. The
// composite method runs the probabilistic phase then a nearest-neighbor phase
// starting from its output. Checkpoints every cfg.eval_every iterations; if a
// benchmark falls more than cfg.early_stop_drop (relative) below its initial
// value, training stops and the last good checkpoint is returned. Throws
// DivergenceError on a non-finite loss or embedding.
TrainResult train(const EmbeddingSet& emb, const TrainConfig& cfg,
                  const TrainInputs& inputs);

}  // namespace fairvec
