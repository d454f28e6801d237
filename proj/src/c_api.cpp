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

#include "fairvec/fairvec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fairvec/bias_metrics.hpp"
#include "fairvec/benchmark.hpp"
#include "fairvec/config.hpp"
#include "fairvec/diagnostics.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/error.hpp"
#include "fairvec/geometric.hpp"
#include "fairvec/reports.hpp"
#include "fairvec/wordlists.hpp"

struct fv_embedding {
  fairvec::EmbeddingSet value;
};

struct fv_bundle {
  fairvec::WordListBundle value;
};

namespace {

thread_local std::string g_last_error;

fv_status fail(fv_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fv_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return FV_OK;
  } catch (const fairvec::Error& e) {
    return fail(static_cast<fv_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FV_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw fairvec::Error(fairvec::ErrorCode::kInvalidArgument,
                         std::string(what) + " must not be NULL");
  }
}

fairvec::RunConfig config_from(const char* json) {
  if (json == nullptr || *json == '\0') return {};
  return fairvec::RunConfig::from_json(json);
}

}  // namespace

extern "C" {

const char* fv_version(void) { return "0.1.0"; }

const char* fv_status_name(fv_status status) {
  if (status == FV_OK) return "ok";
  if (status == FV_ERR_INTERNAL) return "internal";
  return fairvec::error_code_name(static_cast<fairvec::ErrorCode>(status));
}

const char* fv_last_error(void) { return g_last_error.c_str(); }

void fv_set_quiet(int quiet) {
  fairvec::set_warning_sink(quiet ? fairvec::WarningSink{} : fairvec::default_warning_sink());
}

void fv_string_free(char* s) { std::free(s); }

fv_status fv_embedding_load(const char* path, size_t limit, fv_embedding** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    const fairvec::VocabLimit lim = limit == 0 ? fairvec::VocabLimit{} : fairvec::VocabLimit{limit};
    *out = new fv_embedding{fairvec::load_vec_file(path, lim)};
  });
}

fv_status fv_embedding_save(const fv_embedding* emb, const char* path) {
  return guarded([&] {
    require(emb, "emb");
    require(path, "path");
    fairvec::save_vec_file(emb->value, path);
  });
}

fv_status fv_embedding_clone(const fv_embedding* emb, fv_embedding** out) {
  return guarded([&] {
    require(emb, "emb");
    require(out, "out");
    *out = new fv_embedding{fairvec::snapshot(emb->value)};
  });
}

void fv_embedding_free(fv_embedding* emb) { delete emb; }

size_t fv_embedding_size(const fv_embedding* emb) { return emb ? emb->value.size() : 0; }
size_t fv_embedding_dim(const fv_embedding* emb) { return emb ? emb->value.dim() : 0; }

const char* fv_embedding_word(const fv_embedding* emb, size_t index) {
  if (emb == nullptr || index >= emb->value.size()) return nullptr;
  return emb->value.word(index).c_str();
}

fv_status fv_embedding_find(const fv_embedding* emb, const char* word, size_t* index) {
  return guarded([&] {
    require(emb, "emb");
    require(word, "word");
    require(index, "index");
    *index = emb->value.index_of(word);
  });
}

fv_status fv_embedding_row(const fv_embedding* emb, size_t index, const double** row) {
  return guarded([&] {
    require(emb, "emb");
    require(row, "row");
    if (index >= emb->value.size()) {
      throw fairvec::Error(fairvec::ErrorCode::kInvalidArgument, "row index out of range");
    }
    *row = emb->value.row(index).data();
  });
}

fv_status fv_bundle_load(const char* directory, int include_baseline, fv_bundle** out) {
  return guarded([&] {
    require(directory, "directory");
    require(out, "out");
    *out = nullptr;
    *out = new fv_bundle{fairvec::load_bundle(directory, include_baseline != 0)};
  });
}

void fv_bundle_free(fv_bundle* bundle) { delete bundle; }

size_t fv_bundle_candidate_count(const fv_bundle* b) {
  return b ? b->value.candidates.size() : 0;
}

const char* fv_bundle_candidate(const fv_bundle* b, size_t index) {
  if (b == nullptr || index >= b->value.candidates.size()) return nullptr;
  return b->value.candidates[index].c_str();
}

size_t fv_bundle_weat_count(const fv_bundle* b) { return b ? b->value.weat_tests.size() : 0; }

const char* fv_bundle_weat_name(const fv_bundle* b, size_t index) {
  if (b == nullptr || index >= b->value.weat_tests.size()) return nullptr;
  return b->value.weat_tests[index].name.c_str();
}

fv_status fv_cosine(const double* u, const double* v, size_t dim, double* out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = fairvec::cosine({u, dim}, {v, dim});
  });
}

fv_status fv_l1_distance(const double* u, const double* v, size_t dim, double* out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = fairvec::l1_distance({u, dim}, {v, dim});
  });
}

fv_status fv_weat_effect_size(const fv_embedding* emb, const fv_bundle* bundle,
                              size_t test_index, double* out) {
  return guarded([&] {
    require(emb, "emb");
    require(bundle, "bundle");
    require(out, "out");
    if (test_index >= bundle->value.weat_tests.size()) {
      throw fairvec::Error(fairvec::ErrorCode::kInvalidArgument, "WEAT test index out of range");
    }
    *out = fairvec::weat_effect_size(emb->value, bundle->value.weat_tests[test_index]);
  });
}

fv_status fv_ripa(const fv_embedding* emb, const fv_bundle* bundle, const char* word,
                  double* out) {
  return guarded([&] {
    require(emb, "emb");
    require(bundle, "bundle");
    require(word, "word");
    require(out, "out");
    const auto relation =
        fairvec::build_gender_subspace(emb->value, bundle->value.gender_pairs, 1);
    *out = fairvec::ripa(emb->value, relation, word);
  });
}

fv_status fv_evaluate_benchmark(const fv_embedding* emb, const char* dataset_path,
                                double* score, double* coverage) {
  return guarded([&] {
    require(emb, "emb");
    require(dataset_path, "dataset_path");
    const auto result =
        fairvec::evaluate(emb->value, fairvec::load_similarity_dataset(dataset_path));
    if (score) *score = result.score;
    if (coverage) *coverage = result.coverage;
  });
}

fv_status fv_audit(const fv_embedding* emb, const fv_embedding* reference,
                   const fv_bundle* bundle, const char* config_json, const char* label,
                   const char* embedding_path, char** report_json) {
  return guarded([&] {
    require(emb, "emb");
    require(bundle, "bundle");
    require(report_json, "report_json");
    *report_json = nullptr;
    const auto cfg = config_from(config_json);
    const auto report = fairvec::run_audit(emb->value, reference ? &reference->value : nullptr,
                                           bundle->value, cfg, label ? label : "Original",
                                           embedding_path ? embedding_path : "");
    *report_json = dup_string(report.to_json());
  });
}

fv_status fv_debias(const fv_embedding* emb, const fv_bundle* bundle, const char* config_json,
                    const char* method, fv_embedding** out, char** report_jsonl) {
  return guarded([&] {
    require(emb, "emb");
    require(bundle, "bundle");
    require(method, "method");
    require(out, "out");
    *out = nullptr;
    if (report_jsonl) *report_jsonl = nullptr;
    const std::string m = method;
    if (m != "geo" && m != "prob" && m != "knn" && m != "composite") {
      throw fairvec::Error(fairvec::ErrorCode::kInvalidArgument, "unknown method: " + m);
    }
    const auto cfg = config_from(config_json);
    try {
      auto outcome = fairvec::run_debias(emb->value, bundle->value, cfg, m);
      if (report_jsonl) *report_jsonl = dup_string(outcome.report.to_jsonl());
      *out = new fv_embedding{std::move(outcome.embedding)};
    } catch (const fairvec::DivergenceError& e) {
      if (report_jsonl) *report_jsonl = dup_string(e.report().to_jsonl());
      throw;
    }
  });
}

fv_status fv_render_report(const char* const* report_jsons, size_t n, char** table,
                           char** csv) {
  return guarded([&] {
    require(report_jsons, "report_jsons");
    std::vector<fairvec::AuditReport> reports;
    for (size_t i = 0; i < n; ++i) {
      require(report_jsons[i], "report json");
      reports.push_back(fairvec::AuditReport::from_json(report_jsons[i]));
    }
    if (table) *table = dup_string(fairvec::render_table(reports));
    if (csv) *csv = dup_string(fairvec::render_csv(reports));
  });
}

fv_status fv_config_resolve(const char* config_json, char** resolved_json, char** hash) {
  return guarded([&] {
    const auto cfg = config_from(config_json);
    cfg.validate();
    if (resolved_json) *resolved_json = dup_string(cfg.to_json());
    if (hash) *hash = dup_string(cfg.hash());
  });
}

}  // extern "C"
