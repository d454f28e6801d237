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

// fairvec command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairvec/fairvec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct EmbeddingDeleter {
  void operator()(fv_embedding* e) const { fv_embedding_free(e); }
};
struct BundleDeleter {
  void operator()(fv_bundle* b) const { fv_bundle_free(b); }
};
struct StringDeleter {
  void operator()(char* s) const { fv_string_free(s); }
};
using EmbeddingPtr = std::unique_ptr<fv_embedding, EmbeddingDeleter>;
using BundlePtr = std::unique_ptr<fv_bundle, BundleDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

void check(fv_status s, const std::string& context) {
  if (s == FV_OK) return;
  throw CliError(kExitRuntime, context + ": " + fv_status_name(s) + ": " + fv_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitRuntime, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out || !(out << content)) throw CliError(kExitRuntime, "cannot write " + path);
}

// Options shared by every subcommand that loads an embedding.
struct Common {
  std::string config_path;
  std::string embedding;
  std::string bundle;
  std::size_t limit = 22000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::size_t neighborhood_k = 100;
  std::size_t n_biased = 1000;
  std::vector<std::string> benchmarks;
  bool quiet = false;

  CLI::Option* o_bundle = nullptr;
  CLI::Option* o_limit = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_threads = nullptr;
  CLI::Option* o_nk = nullptr;
  CLI::Option* o_nb = nullptr;
  CLI::Option* o_bench = nullptr;

  void add_to(CLI::App* app, bool needs_embedding) {
    app->add_option("--config", config_path, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    auto* e = app->add_option("--embedding", embedding, "Embedding in .vec text format");
    if (needs_embedding) e->required();
    o_bundle = app->add_option("--bundle", bundle, "Word-list directory (default: data)");
    o_limit = app->add_option("--limit", limit, "Vocabulary size limit (default 22000)")
                  ->check(CLI::PositiveNumber);
    o_seed = app->add_option("--seed", seed, "Random seed");
    o_threads = app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    o_nk = app->add_option("--neighborhood-k", neighborhood_k,
                           "Neighbors considered by the neighborhood metric");
    o_nb = app->add_option("--n-biased", n_biased, "Size of the socially-biased pool");
    o_bench = app->add_option("--benchmark", benchmarks,
                              "Word-similarity dataset (repeatable)");
    app->add_flag("--quiet", quiet, "Suppress warnings");
  }

  nlohmann::ordered_json config() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (!config_path.empty()) {
      try {
        j = nlohmann::ordered_json::parse(read_file(config_path));
      } catch (const nlohmann::json::exception& ex) {
        throw CliError(kExitRuntime, config_path + ": " + ex.what());
      }
    }
    if (o_bundle->count()) j["bundle"] = bundle;
    if (o_limit->count()) j["limit"] = limit;
    if (o_seed->count()) j["seed"] = seed;
    if (o_threads->count()) j["threads"] = threads;
    if (o_nk->count()) j["neighborhood_k"] = neighborhood_k;
    if (o_nb->count()) j["n_biased"] = n_biased;
    if (o_bench->count()) j["benchmarks"] = benchmarks;
    return j;
  }
};

struct Resolved {
  std::string json;
  nlohmann::ordered_json value;
};

Resolved resolve(const nlohmann::ordered_json& partial) {
  char* out = nullptr;
  check(fv_config_resolve(partial.dump().c_str(), &out, nullptr), "config");
  CString holder(out);
  Resolved r{out, nlohmann::ordered_json::parse(out)};
  return r;
}

EmbeddingPtr load_embedding(const std::string& path, std::size_t limit) {
  fv_embedding* e = nullptr;
  check(fv_embedding_load(path.c_str(), limit, &e), "loading " + path);
  return EmbeddingPtr(e);
}

BundlePtr load_bundle(const nlohmann::ordered_json& cfg) {
  fv_bundle* b = nullptr;
  const auto dir = cfg.at("bundle").get<std::string>();
  check(fv_bundle_load(dir.c_str(), cfg.at("include_baseline").get<bool>() ? 1 : 0, &b),
        "loading word lists from " + dir);
  return BundlePtr(b);
}

std::string render_one(const std::string& report_json) {
  const char* docs[] = {report_json.c_str()};
  char* table = nullptr;
  check(fv_render_report(docs, 1, &table, nullptr), "rendering report");
  CString holder(table);
  return table;
}

int run_audit(const Common& common, const std::string& label, const std::string& reference,
              const std::string& out_path) {
  const Resolved cfg = resolve(common.config());
  const auto limit = cfg.value.at("limit").get<std::size_t>();
  auto emb = load_embedding(common.embedding, limit);
  EmbeddingPtr ref;
  if (!reference.empty()) ref = load_embedding(reference, limit);
  auto bundle = load_bundle(cfg.value);
  char* json = nullptr;
  check(fv_audit(emb.get(), ref.get(), bundle.get(), cfg.json.c_str(), label.c_str(),
                 common.embedding.c_str(), &json),
        "audit");
  CString holder(json);
  std::cout << render_one(json);
  if (!out_path.empty()) write_file(out_path, json);
  return kExitOk;
}

int run_debias(const Common& common, const std::string& method, std::size_t iterations,
               bool has_iterations, std::size_t neighbor_k, bool has_nk, std::size_t negatives,
               bool has_neg, double lr, bool has_lr, std::size_t batch, bool has_batch,
               const std::string& out_path, const std::string& report_path) {
  if (method != "geo" && method != "prob" && method != "knn" && method != "composite") {
    throw CliError(kExitUsage, "--method must be one of geo, prob, knn, composite (got '" +
                                   method + "')");
  }
  auto partial = common.config();
  partial["method"] = method == "geo" ? "geo" : method;
  if (has_iterations) partial["iterations"] = iterations;
  if (has_nk) partial["neighbor_k"] = neighbor_k;
  if (has_neg) partial["negatives"] = negatives;
  if (has_lr) partial["learning_rate"] = lr;
  if (has_batch) partial["batch_size"] = batch;
  const Resolved cfg = resolve(partial);

  auto emb = load_embedding(common.embedding, cfg.value.at("limit").get<std::size_t>());
  auto bundle = load_bundle(cfg.value);
  fv_embedding* result = nullptr;
  char* report = nullptr;
  const fv_status s =
      fv_debias(emb.get(), bundle.get(), cfg.json.c_str(), method.c_str(), &result, &report);
  EmbeddingPtr result_holder(result);
  CString report_holder(report);
  const std::string report_text = report ? report : "";
  const std::string report_out = report_path.empty() ? out_path + ".report.jsonl" : report_path;
  if (s == FV_ERR_DIVERGENCE) {
    const std::string message = fv_last_error();
    if (!report_text.empty()) {
      write_file(report_out, report_text);
      std::cerr << report_text;
    }
    throw CliError(kExitRuntime, std::string("debias: ") + message);
  }
  check(s, "debias");
  check(fv_embedding_save(result, out_path.c_str()), "saving " + out_path);
  write_file(report_out, report_text);
  std::cout << "wrote " << out_path << " and " << report_out << "\n" << report_text;
  return kExitOk;
}

int run_eval(const Common& common) {
  const Resolved cfg = resolve(common.config());
  const auto benchmarks = cfg.value.at("benchmarks").get<std::vector<std::string>>();
  if (benchmarks.empty()) throw CliError(kExitUsage, "eval needs at least one --benchmark");
  auto emb = load_embedding(common.embedding, cfg.value.at("limit").get<std::size_t>());
  std::printf("%-32s %10s %10s\n", "dataset", "spearman", "coverage");
  for (const auto& path : benchmarks) {
    double score = 0.0, coverage = 0.0;
    check(fv_evaluate_benchmark(emb.get(), path.c_str(), &score, &coverage), path);
    std::printf("%-32s %10.4f %10.4f\n", path.c_str(), score, coverage);
  }
  return kExitOk;
}

int run_report(const std::vector<std::string>& inputs, const std::string& csv_path) {
  std::vector<std::string> docs;
  for (const auto& p : inputs) docs.push_back(read_file(p));
  std::vector<const char*> ptrs;
  for (const auto& d : docs) ptrs.push_back(d.c_str());
  char* table = nullptr;
  char* csv = nullptr;
  check(fv_render_report(ptrs.data(), ptrs.size(), &table, &csv), "report");
  CString t(table), c(csv);
  std::cout << table;
  if (!csv_path.empty()) {
    write_file(csv_path, csv);
  } else {
    std::cout << "\n" << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure and mitigate gender bias in word embeddings"};
  app.require_subcommand(1);

  Common audit_opts, debias_opts, eval_opts;

  auto* audit = app.add_subcommand("audit", "Compute WEAT, RIPA, neighborhood bias and benchmarks");
  audit_opts.add_to(audit, true);
  std::string label = "Original", reference, audit_out;
  audit->add_option("--label", label, "Row label (default: Original)");
  audit->add_option("--reference", reference,
                    "Embedding supplying the relation vector and biased-word pools");
  audit->add_option("--out", audit_out, "Write the audit report JSON here");

  auto* debias = app.add_subcommand("debias", "Mitigate bias and write a new embedding");
  debias_opts.add_to(debias, true);
  std::string method, debias_out, report_path;
  std::size_t iterations = 1000, neighbor_k = 10, negatives = 5, batch = 64;
  double lr = 0.01;
  debias->add_option("--method", method, "geo | prob | knn | composite")->required();
  auto* o_it = debias->add_option("--iterations", iterations, "SGD iterations (default 1000)");
  auto* o_nk = debias->add_option("--neighbor-k", neighbor_k, "Neighbors for the NN loss (even)");
  auto* o_neg = debias->add_option("--negatives", negatives, "Negative samples per estimate");
  auto* o_lr = debias->add_option("--learning-rate", lr, "SGD step size");
  auto* o_batch = debias->add_option("--batch-size", batch, "Targets per batch");
  debias->add_option("--out", debias_out, "Output .vec path")->required();
  debias->add_option("--report", report_path, "Checkpoint report path (JSON lines)");

  auto* eval = app.add_subcommand("eval", "Score an embedding on word-similarity datasets");
  eval_opts.add_to(eval, true);

  auto* report = app.add_subcommand("report", "Tabulate audit reports");
  std::vector<std::string> report_inputs;
  std::string csv_path;
  report->add_option("reports", report_inputs, "Audit report JSON files")->required();
  report->add_option("--csv", csv_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*audit) {
      fv_set_quiet(audit_opts.quiet);
      return run_audit(audit_opts, label, reference, audit_out);
    }
    if (*debias) {
      fv_set_quiet(debias_opts.quiet);
      return run_debias(debias_opts, method, iterations, o_it->count() > 0, neighbor_k,
                        o_nk->count() > 0, negatives, o_neg->count() > 0, lr,
                        o_lr->count() > 0, batch, o_batch->count() > 0, debias_out,
                        report_path);
    }
    if (*eval) {
      fv_set_quiet(eval_opts.quiet);
      return run_eval(eval_opts);
    }
    if (*report) return run_report(report_inputs, csv_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
