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

#include "fairvec/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "fairvec/diagnostics.hpp"
#include "fairvec/error.hpp"
#include "fairvec/geometric.hpp"

namespace fairvec {
namespace {

using nlohmann::ordered_json;

std::string fmt(double v, int precision = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<const AuditReport*> ordered(std::span<const AuditReport> reports) {
  std::vector<const AuditReport*> out;
  for (const auto& r : reports) out.push_back(&r);
  const auto& labels = canonical_labels();
  auto rank = [&](const AuditReport* r) {
    auto it = std::find(labels.begin(), labels.end(), r->label);
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::stable_sort(out.begin(), out.end(), [&](const AuditReport* a, const AuditReport* b) {
    return rank(a) < rank(b);
  });
  return out;
}

// Union of names across reports, first-seen order.
template <typename Get>
std::vector<std::string> column_names(const std::vector<const AuditReport*>& rows, Get get) {
  std::vector<std::string> out;
  for (const AuditReport* r : rows) {
    for (const std::string& n : get(*r)) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  }
  return out;
}

std::vector<std::string> weat_names(const AuditReport& r) {
  std::vector<std::string> out;
  for (const auto& w : r.weat) out.push_back(w.name);
  return out;
}

std::vector<std::string> bench_names(const AuditReport& r) {
  std::vector<std::string> out;
  for (const auto& b : r.benchmarks) out.push_back(b.name);
  return out;
}

}  // namespace

std::string AuditReport::to_json() const {
  ordered_json j;
  j["label"] = label;
  j["metadata"] = {{"embedding", embedding},
                   {"vocab_limit", vocab_limit},
                   {"seed", seed},
                   {"config_hash", config_hash}};
  ordered_json weat_j = ordered_json::array();
  for (const auto& w : weat) weat_j.push_back({{"test", w.name}, {"effect_size", w.value}});
  j["weat"] = weat_j;
  j["ripa_mean_abs"] = ripa_mean_abs;
  j["neighborhood_mean_dev"] = neighborhood_mean_dev;
  ordered_json bench_j = ordered_json::array();
  for (const auto& b : benchmarks) {
    bench_j.push_back({{"name", b.name}, {"score", b.score}, {"coverage", b.coverage}});
  }
  j["benchmarks"] = bench_j;
  return j.dump(2) + "\n";
}

AuditReport AuditReport::from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    AuditReport r;
    r.label = j.at("label").get<std::string>();
    const auto& m = j.at("metadata");
    r.embedding = m.at("embedding").get<std::string>();
    r.vocab_limit = m.at("vocab_limit").get<std::size_t>();
    r.seed = m.at("seed").get<std::uint64_t>();
    r.config_hash = m.at("config_hash").get<std::string>();
    for (const auto& w : j.at("weat")) {
      r.weat.push_back({w.at("test").get<std::string>(), w.at("effect_size").get<double>()});
    }
    r.ripa_mean_abs = j.at("ripa_mean_abs").get<double>();
    r.neighborhood_mean_dev = j.at("neighborhood_mean_dev").get<double>();
    for (const auto& b : j.at("benchmarks")) {
      r.benchmarks.push_back({b.at("name").get<std::string>(), b.at("score").get<double>(),
                              b.at("coverage").get<double>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("audit report: ") + e.what());
  }
}

const std::vector<std::string>& canonical_labels() {
  static const std::vector<std::string> labels = {
      "Original", "Geometric", "Simple Probabilistic", "Nearest Neighbor",
      "Composite NN + Prob"};
  return labels;
}

std::string label_for_method(std::string_view method) {
  if (method == "orig" || method == "original") return "Original";
  if (method == "geo") return "Geometric";
  if (method == "prob" || method == "probabilistic") return "Simple Probabilistic";
  if (method == "knn" || method == "nearest-neighbor") return "Nearest Neighbor";
  if (method == "composite") return "Composite NN + Prob";
  return std::string(method);
}

std::optional<ReferenceRow> reference_values(std::string_view label) {
  if (label == "Original") return ReferenceRow{2.895, 0.323};
  if (label == "Geometric") return ReferenceRow{0.096, 0.328};
  if (label == "Simple Probabilistic") return ReferenceRow{0.320, 0.250};
  if (label == "Nearest Neighbor") return ReferenceRow{1.705, 0.083};
  if (label == "Composite NN + Prob") return ReferenceRow{0.372, 0.034};
  return std::nullopt;
}

BiasContext build_bias_context(const EmbeddingSet& emb, const WordListBundle& bundle,
                               const RunConfig& cfg) {
  BiasContext ctx;
  ctx.relation = build_gender_subspace(emb, bundle.gender_pairs, 1);
  const auto pool = default_candidate_pool(emb, bundle.definitional_words());
  ctx.neighbor_sets = extract_biased_neighbor_sets(emb, ctx.relation, pool,
                                                   bundle.gender_pairs, cfg.n_biased);
  std::size_t dropped = 0;
  for (const auto& w : bundle.candidates) {
    if (emb.contains(w)) {
      ctx.targets.push_back(w);
    } else {
      ++dropped;
    }
  }
  if (dropped > 0) {
    warn(std::to_string(dropped) + " candidate words not in vocabulary, skipped");
  }
  if (ctx.targets.empty()) {
    throw Error(ErrorCode::kMissingWord, "no candidate word is in the vocabulary");
  }
  return ctx;
}

std::vector<SimilarityDataset> load_benchmarks(const RunConfig& cfg) {
  std::vector<SimilarityDataset> out;
  for (const auto& path : cfg.benchmarks) out.push_back(load_similarity_dataset(path));
  return out;
}

std::vector<BenchmarkScore> run_benchmarks(const EmbeddingSet& emb,
                                           std::span<const SimilarityDataset> datasets) {
  std::vector<BenchmarkScore> out;
  for (const auto& ds : datasets) {
    const BenchmarkResult r = evaluate(emb, ds);
    out.push_back({ds.name, r.score, r.coverage});
  }
  return out;
}

AuditReport run_audit(const EmbeddingSet& emb, const EmbeddingSet* reference,
                      const WordListBundle& bundle, const RunConfig& cfg,
                      std::string label, std::string embedding_path) {
  cfg.validate();
  if (reference != nullptr && reference->vocab() != emb.vocab()) {
    throw Error(ErrorCode::kInvalidArgument,
                "reference embedding must have the same vocabulary as the audited one");
  }
  const BiasContext ctx = build_bias_context(reference ? *reference : emb, bundle, cfg);

  AuditReport r;
  r.label = std::move(label);
  r.embedding = std::move(embedding_path);
  r.vocab_limit = cfg.limit;
  r.seed = cfg.seed;
  r.config_hash = cfg.hash();
  for (const WeatTest& t : bundle.weat_tests) {
    try {
      r.weat.push_back({t.name, weat_effect_size(emb, t)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMissingWord && e.code() != ErrorCode::kDegenerateTest) throw;
      warn("skipping WEAT test '" + t.name + "': " + e.what());
    }
  }
  if (cfg.ripa_scope == "vocab") {
    r.ripa_mean_abs = mean_abs_ripa(emb, ctx.relation, emb.vocab());
  } else {
    r.ripa_mean_abs = mean_abs_ripa(emb, ctx.relation, ctx.targets);
  }
  r.neighborhood_mean_dev = mean_neighborhood_deviation(emb, ctx.neighbor_sets, ctx.targets,
                                                        cfg.neighborhood_k, cfg.threads);
  r.benchmarks = run_benchmarks(emb, load_benchmarks(cfg));
  return r;
}

DebiasOutcome run_debias(const EmbeddingSet& emb, const WordListBundle& bundle,
                         const RunConfig& cfg, std::string_view method) {
  cfg.validate();
  const auto datasets = load_benchmarks(cfg);
  BiasContext ctx = build_bias_context(emb, bundle, cfg);

  EvalFn metrics = [&](const EmbeddingSet& e) {
    return std::vector<NamedValue>{
        {"ripa_mean_abs", mean_abs_ripa(e, ctx.relation, ctx.targets)},
        {"neighborhood_mean_dev",
         mean_neighborhood_deviation(e, ctx.neighbor_sets, ctx.targets, cfg.neighborhood_k,
                                     cfg.threads)}};
  };
  EvalFn benchmarks = [&](const EmbeddingSet& e) {
    std::vector<NamedValue> out;
    for (const auto& b : run_benchmarks(e, datasets)) out.push_back({b.name, b.score});
    return out;
  };

  if (method == "geo") {
    const BiasSubspace subspace = build_gender_subspace(emb, bundle.gender_pairs, cfg.subspace_k);
    DebiasOutcome out{geometric_debias(emb, subspace, ctx.targets), {}};
    out.report.records.push_back({"geometric", 0, 0.0, metrics(emb), benchmarks(emb)});
    out.report.records.push_back(
        {"geometric", 1, 0.0, metrics(out.embedding), benchmarks(out.embedding)});
    return out;
  }

  TrainConfig tc = cfg.train_config();
  tc.method = parse_method(method);
  TrainInputs inputs;
  inputs.targets = ctx.targets;
  inputs.pairs = resolve_pairs(bundle.gender_pairs, emb);
  inputs.neighbor_sets = ctx.neighbor_sets;
  inputs.sampler = cfg.frequency_table.empty()
                       ? build_rank_sampler(emb, cfg.seed)
                       : build_frequency_sampler(emb, load_frequency_table(cfg.frequency_table),
                                                 cfg.seed);
  inputs.metrics = metrics;
  inputs.benchmarks = benchmarks;
  TrainResult result = train(emb, tc, inputs);
  return {std::move(result.embedding), std::move(result.report)};
}

std::string render_table(std::span<const AuditReport> reports) {
  const auto rows = ordered(reports);
  const auto weats = column_names(rows, weat_names);
  const auto benches = column_names(rows, bench_names);

  std::vector<std::string> header = {"Method", "RIPA |mean|", "Neighborhood |.5-mean|",
                                     "ref RIPA", "ref Nbhd"};
  for (const auto& w : weats) header.push_back("WEAT " + w);
  for (const auto& b : benches) header.push_back(b + " (higher is better)");

  std::vector<std::vector<std::string>> cells;
  for (const AuditReport* r : rows) {
    std::vector<std::string> line = {r->label, fmt(r->ripa_mean_abs),
                                     fmt(r->neighborhood_mean_dev)};
    if (auto ref = reference_values(r->label)) {
      line.push_back(fmt(ref->ripa));
      line.push_back(fmt(ref->neighborhood));
    } else {
      line.push_back("-");
      line.push_back("-");
    }
    for (const auto& w : weats) {
      auto it = std::find_if(r->weat.begin(), r->weat.end(),
                             [&](const NamedValue& v) { return v.name == w; });
      line.push_back(it == r->weat.end() ? "-" : fmt(it->value));
    }
    for (const auto& b : benches) {
      auto it = std::find_if(r->benchmarks.begin(), r->benchmarks.end(),
                             [&](const BenchmarkScore& v) { return v.name == b; });
      line.push_back(it == r->benchmarks.end() ? "-" : fmt(it->score));
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) os << "  ";
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      } else {
        os << std::right << std::setw(static_cast<int>(width[c])) << line[c];
      }
    }
    os << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& line : cells) emit(line);
  return os.str();
}

std::string render_csv(std::span<const AuditReport> reports) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "method,metric,value\n";
  for (const AuditReport* r : ordered(reports)) {
    const std::string m = quote(r->label);
    os << m << ",ripa_mean_abs," << fmt_full(r->ripa_mean_abs) << '\n';
    os << m << ",neighborhood_mean_dev," << fmt_full(r->neighborhood_mean_dev) << '\n';
    for (const auto& w : r->weat) {
      os << m << ',' << quote("weat:" + w.name) << ',' << fmt_full(w.value) << '\n';
    }
    for (const auto& b : r->benchmarks) {
      os << m << ',' << quote("benchmark:" + b.name) << ',' << fmt_full(b.score) << '\n';
      os << m << ',' << quote("coverage:" + b.name) << ',' << fmt_full(b.coverage) << '\n';
    }
  }
  return os.str();
}

}  // namespace fairvec
