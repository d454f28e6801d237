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

#include "fairvec/trainer.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

#include "fairvec/parallel.hpp"

namespace fairvec {
namespace {

constexpr std::uint64_t kBatchStream = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kNegativeStream = 0xBF58476D1CE4E5B9ULL;
constexpr std::uint64_t kEvalStream = 0x94D049BB133111EBULL;

const char* phase_name(Method m) {
  return m == Method::kProbabilistic ? "probabilistic" : "nearest-neighbor";
}

std::vector<std::size_t> resolve_targets(const EmbeddingSet& emb,
                                         const std::vector<std::string>& targets) {
  std::vector<std::size_t> out;
  std::string missing;
  for (const std::string& t : targets) {
    if (auto i = emb.find(t)) {
      out.push_back(*i);
    } else {
      missing += (missing.empty() ? "" : ", ") + t;
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingWord, "training targets not in vocabulary: " + missing);
  }
  return out;
}

// Terms of one target for the given phase. Draws negatives from `sampler`.
std::vector<LossTerm> target_terms(Method phase, const EmbeddingSet& emb,
                                   std::size_t target, const PairIndices& pairs,
                                   const TrainInputs& inputs, const TrainConfig& cfg,
                                   const NeighborSelection* selection,
                                   NegativeSampler& sampler) {
  if (phase == Method::kProbabilistic) {
    return probabilistic_terms(target, pairs, sampler, cfg.sgns.k_negatives);
  }
  if (selection != nullptr) {
    return nearest_neighbor_terms(target, *selection, sampler, cfg.sgns.k_negatives);
  }
  const auto sel =
      nearest_biased_neighbors(emb, target, *inputs.neighbor_sets, cfg.neighbor_k / 2);
  return nearest_neighbor_terms(target, sel, sampler, cfg.sgns.k_negatives);
}

bool rows_finite(const EmbeddingSet& emb, const Gradient& grad) {
  for (const auto& [i, g] : grad.input) {
    for (double v : emb.row(i)) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

class Session {
 public:
  Session(const EmbeddingSet& emb, const TrainConfig& cfg, const TrainInputs& inputs)
      : cfg_(cfg),
        inputs_(inputs),
        input_(emb),
        output_(inputs.output_vectors),
        targets_(resolve_targets(emb, inputs.targets)),
        pairs_(pair_indices(emb, inputs.pairs)),
        sampler_(inputs.sampler ? *inputs.sampler : build_rank_sampler(emb, 0)),
        batch_rng_(cfg.seed ^ kBatchStream) {
    sampler_.reseed(cfg.seed ^ kNegativeStream);
    eval_sampler_ = sampler_;
    eval_sampler_.reseed(cfg.seed ^ kEvalStream);
  }

  TrainResult run() {
    std::vector<Method> phases;
    if (cfg_.method == Method::kComposite) {
      phases = {Method::kProbabilistic, Method::kNearestNeighbor};
    } else {
      phases = {cfg_.method};
    }
    last_good_ = input_;
    last_good_output_ = output_;
    for (Method phase : phases) {
      if (!run_phase(phase)) break;
    }
    return {std::move(last_good_), std::move(last_good_output_), std::move(report_)};
  }

 private:
  SgnsVectors vectors() const {
    return output_ ? SgnsVectors{&input_, &*output_} : SgnsVectors::tied(input_);
  }

  [[noreturn]] void diverge(const std::string& phase, std::size_t it,
                            const std::string& why) {
    std::ostringstream os;
    os << "training diverged in " << phase << " phase at iteration " << it << ": " << why;
    report_.stop_reason = StopReason::kDiverged;
    report_.diagnostic = os.str();
    throw DivergenceError(os.str(), report_);
  }

  // Records a checkpoint; returns false when the early-stop rule fires.
  bool checkpoint(Method phase, std::size_t it) {
    CheckpointRecord rec;
    rec.phase = phase_name(phase);
    rec.iteration = it;
    rec.loss = full_loss(phase, vectors(), inputs_, cfg_, eval_sampler_);
    if (!std::isfinite(rec.loss)) {
      report_.records.push_back(rec);
      diverge(rec.phase, it, "non-finite loss");
    }
    if (inputs_.metrics) rec.metrics = inputs_.metrics(input_);
    if (inputs_.benchmarks) rec.benchmarks = inputs_.benchmarks(input_);

    if (!initial_benchmarks_) initial_benchmarks_ = rec.benchmarks;
    bool ok = true;
    for (std::size_t i = 0; i < rec.benchmarks.size() && i < initial_benchmarks_->size(); ++i) {
      const double init = (*initial_benchmarks_)[i].value;
      const double cur = rec.benchmarks[i].value;
      const double drop = init != 0.0 ? (init - cur) / std::abs(init) : init - cur;
      if (!(drop <= cfg_.early_stop_drop)) {
        ok = false;
        std::ostringstream os;
        os << "benchmark '" << rec.benchmarks[i].name << "' fell from " << init << " to "
           << cur << " at " << rec.phase << " iteration " << it;
        report_.diagnostic = os.str();
      }
    }
    report_.records.push_back(std::move(rec));
    if (!ok) {
      report_.stop_reason = StopReason::kEarlyStop;
      return false;
    }
    last_good_ = input_;
    last_good_output_ = output_;
    return true;
  }

  bool run_phase(Method phase) {
    if (phase == Method::kNearestNeighbor && !inputs_.neighbor_sets) {
      throw Error(ErrorCode::kInvalidArgument,
                  "nearest-neighbor training needs socially-biased neighbor sets");
    }
    if (!checkpoint(phase, 0)) return false;
    const std::string name = phase_name(phase);
    for (std::size_t it = 1; it <= cfg_.iterations; ++it) {
      std::vector<std::size_t> batch(cfg_.batch_size);
      for (auto& b : batch) {
        const double u = static_cast<double>(batch_rng_() >> 11) * 0x1.0p-53;
        b = targets_[static_cast<std::size_t>(u * static_cast<double>(targets_.size()))];
      }

      // Neighbor selection is pure and runs in parallel; negatives are drawn
      // sequentially so the stream does not depend on the thread count.
      std::vector<NeighborSelection> selections;
      if (phase == Method::kNearestNeighbor) {
        selections.resize(batch.size());
        parallel_for(batch.size(), cfg_.threads, [&](std::size_t i) {
          selections[i] = nearest_biased_neighbors(input_, batch[i], *inputs_.neighbor_sets,
                                                   cfg_.neighbor_k / 2);
        });
      }
      std::vector<std::vector<LossTerm>> terms(batch.size());
      for (std::size_t i = 0; i < batch.size(); ++i) {
        terms[i] = target_terms(phase, input_, batch[i], pairs_, inputs_, cfg_,
                                selections.empty() ? nullptr : &selections[i], sampler_);
      }

      std::vector<Gradient> grads(batch.size());
      std::vector<double> losses(batch.size());
      const SgnsVectors v = vectors();
      parallel_for(batch.size(), cfg_.threads, [&](std::size_t i) {
        losses[i] = terms_loss_and_gradient(v, terms[i], cfg_.loss_form, grads[i]);
      });
      Gradient total;
      double batch_loss = 0.0;
      for (std::size_t i = 0; i < batch.size(); ++i) {
        total.add(grads[i]);
        batch_loss += losses[i];
      }
      if (!std::isfinite(batch_loss)) diverge(name, it, "non-finite batch loss");

      sgd_step(input_, output_ ? &*output_ : nullptr, total, cfg_.learning_rate);
      if (!rows_finite(input_, total)) diverge(name, it, "non-finite embedding values");

      if (it % cfg_.eval_every == 0 || it == cfg_.iterations) {
        if (!checkpoint(phase, it)) return false;
      }
    }
    return true;
  }

  const TrainConfig& cfg_;
  const TrainInputs& inputs_;
  EmbeddingSet input_;
  std::optional<EmbeddingSet> output_;
  std::vector<std::size_t> targets_;
  PairIndices pairs_;
  NegativeSampler sampler_;
  NegativeSampler eval_sampler_;
  std::mt19937_64 batch_rng_;
  TrainReport report_;
  EmbeddingSet last_good_;
  std::optional<EmbeddingSet> last_good_output_;
  std::optional<std::vector<NamedValue>> initial_benchmarks_;
};

}  // namespace

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::kProbabilistic: return "probabilistic";
    case Method::kNearestNeighbor: return "nearest-neighbor";
    case Method::kComposite: return "composite";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "probabilistic" || name == "prob") return Method::kProbabilistic;
  if (name == "nearest-neighbor" || name == "knn") return Method::kNearestNeighbor;
  if (name == "composite") return Method::kComposite;
  throw Error(ErrorCode::kInvalidArgument, "unknown training method: " + std::string(name));
}

void TrainConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::kInvalidArgument, m); };
  if (batch_size < 1) fail("batch_size must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) fail("learning_rate must be > 0");
  if (neighbor_k < 2 || neighbor_k % 2 != 0) fail("neighbor_k must be even and >= 2");
  if (eval_every < 1) fail("eval_every must be >= 1");
  if (!(early_stop_drop >= 0.0)) fail("early_stop_drop must be >= 0");
  if (threads < 1) fail("threads must be >= 1");
  sgns.validate();
}

std::string TrainReport::to_jsonl() const {
  using nlohmann::ordered_json;
  std::string out;
  for (const CheckpointRecord& r : records) {
    ordered_json j;
    j["phase"] = r.phase;
    j["iteration"] = r.iteration;
    j["loss"] = r.loss;
    ordered_json metrics = ordered_json::object();
    for (const auto& m : r.metrics) metrics[m.name] = m.value;
    j["metrics"] = metrics;
    ordered_json bench = ordered_json::object();
    for (const auto& b : r.benchmarks) bench[b.name] = b.value;
    j["benchmarks"] = bench;
    out += j.dump() + "\n";
  }
  ordered_json summary;
  summary["stop_reason"] = stop_reason == StopReason::kCompleted   ? "completed"
                           : stop_reason == StopReason::kEarlyStop ? "early-stop"
                                                                   : "diverged";
  if (!diagnostic.empty()) summary["diagnostic"] = diagnostic;
  out += summary.dump() + "\n";
  return out;
}

void sgd_step(EmbeddingSet& input, EmbeddingSet* output, const Gradient& grad,
              double learning_rate) {
  for (const auto& [i, g] : grad.input) {
    auto row = input.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= learning_rate * g[j];
  }
  if (output != nullptr) {
    for (const auto& [i, g] : grad.output) {
      auto row = output->row(i);
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= learning_rate * g[j];
    }
  } else if (!grad.output.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gradient has output rows but no output vectors");
  }
}

double full_loss(Method phase, const SgnsVectors& vectors, const TrainInputs& inputs,
                 const TrainConfig& cfg, const NegativeSampler& sampler) {
  NegativeSampler draw = sampler;
  const EmbeddingSet& emb = *vectors.input;
  const PairIndices pairs = pair_indices(emb, inputs.pairs);
  const auto targets = resolve_targets(emb, inputs.targets);
  std::vector<std::vector<LossTerm>> terms(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    terms[i] = target_terms(phase, emb, targets[i], pairs, inputs, cfg, nullptr, draw);
  }
  std::vector<double> losses(targets.size());
  parallel_for(targets.size(), cfg.threads, [&](std::size_t i) {
    losses[i] = terms_loss(vectors, terms[i], cfg.loss_form);
  });
  double s = 0.0;
  for (double l : losses) s += l;
  return s / static_cast<double>(targets.size());
}

TrainResult train(const EmbeddingSet& emb, const TrainConfig& cfg,
                  const TrainInputs& inputs) {
  cfg.validate();
  if (inputs.targets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "training needs at least one target word");
  }
  inputs.pairs.validate();
  if (!cfg.sgns.tie_inputs_outputs && !inputs.output_vectors) {
    throw Error(ErrorCode::kInvalidArgument, "untied SGNS training needs output vectors");
  }
  if (cfg.sgns.tie_inputs_outputs && inputs.output_vectors) {
    throw Error(ErrorCode::kInvalidArgument,
                "output vectors given but tie_inputs_outputs is set");
  }
  if (inputs.output_vectors && (inputs.output_vectors->vocab() != emb.vocab() ||
                                inputs.output_vectors->dim() != emb.dim())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "output vectors must share the embedding's vocabulary and dimension");
  }
  if (inputs.sampler && inputs.sampler->size() != emb.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sampler vocabulary size differs from embedding");
  }
  Session session(emb, cfg, inputs);
  return session.run();
}

}  // namespace fairvec
