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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvec/benchmark.hpp"
#include "fairvec/bias_metrics.hpp"
#include "fairvec/config.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/trainer.hpp"
#include "fairvec/wordlists.hpp"

namespace fairvec {

struct BenchmarkScore {
  std::string name;
  double score = 0.0;
  double coverage = 0.0;
};

// One row of the bias/quality comparison table.
struct AuditReport {
  std::string label;
  std::string embedding;
  std::size_t vocab_limit = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<NamedValue> weat;  // effect size per test, bundle order
  double ripa_mean_abs = 0.0;
  double neighborhood_mean_dev = 0.0;
  std::vector<BenchmarkScore> benchmarks;

  std::string to_json() const;
  static AuditReport from_json(std::string_view json);
};

// Canonical row labels in table order.
const std::vector<std::string>& canonical_labels();
// "geo" -> "Geometric", ...; other strings map to themselves.
std::string label_for_method(std::string_view method);

// Published reference values (mean |RIPA|, mean |0.5 - neighborhood|) for the
// canonical labels on the 22000-word fastText subset.
struct ReferenceRow {
  double ripa;
  double neighborhood;
};
std::optional<ReferenceRow> reference_values(std::string_view label);

// Relation vector and socially-biased pools shared by audits and training.
struct BiasContext {
  BiasSubspace relation;
  BiasedNeighborSets neighbor_sets;
  std::vector<std::string> targets;  // bundle candidates present in the vocabulary
};
BiasContext build_bias_context(const EmbeddingSet& emb, const WordListBundle& bundle,
                               const RunConfig& cfg);

std::vector<BenchmarkScore> run_benchmarks(const EmbeddingSet& emb,
                                           std::span<const SimilarityDataset> datasets);
std::vector<SimilarityDataset> load_benchmarks(const RunConfig& cfg);

// All three bias measures plus benchmarks. The relation vector and biased
// pools come from `reference` when given (it must share the vocabulary),
// otherwise from `emb` itself. WEAT tests with no resolvable words are
// skipped with a warning.
AuditReport run_audit(const EmbeddingSet& emb, const EmbeddingSet* reference,
                      const WordListBundle& bundle, const RunConfig& cfg,
                      std::string label, std::string embedding_path);

struct DebiasOutcome {
  EmbeddingSet embedding;
  TrainReport report;
};

// method: geo | prob | knn | composite. Trained methods throw DivergenceError.
DebiasOutcome run_debias(const EmbeddingSet& emb, const WordListBundle& bundle,
                         const RunConfig& cfg, std::string_view method);

// Aligned text table, rows in canonical order (unknown labels last, input
// order). Benchmarks are "higher is better".
std::string render_table(std::span<const AuditReport> reports);
// method,metric,value rows; method order as the table, then metric order.
std::string render_csv(std::span<const AuditReport> reports);

}  // namespace fairvec
