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

/* C interface to the fairvec library: opaque handles and status codes.
 *
 * Every function returning fv_status reports failure through its return value;
 * fv_last_error() then holds a message for the calling thread. Strings handed
 * out through char** parameters are owned by the caller and released with
 * fv_string_free. */
#ifndef FAIRVEC_FAIRVEC_H_
#define FAIRVEC_FAIRVEC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FAIRVEC_BUILDING)
#    define FAIRVEC_API __declspec(dllexport)
#  else
#    define FAIRVEC_API __declspec(dllimport)
#  endif
#else
#  define FAIRVEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fv_status {
  FV_OK = 0,
  FV_ERR_IO = 1,
  FV_ERR_PARSE = 2,
  FV_ERR_DIMENSION_MISMATCH = 3,
  FV_ERR_EMPTY_EMBEDDING = 4,
  FV_ERR_DOMAIN = 5,
  FV_ERR_RANK = 6,
  FV_ERR_MISSING_WORD = 7,
  FV_ERR_DEGENERATE_TEST = 8,
  FV_ERR_INSUFFICIENT_CANDIDATES = 9,
  FV_ERR_INSUFFICIENT_COVERAGE = 10,
  FV_ERR_UNDEFINED_CORRELATION = 11,
  FV_ERR_DIVERGENCE = 12,
  FV_ERR_INVALID_ARGUMENT = 13,
  FV_ERR_INTERNAL = 99
} fv_status;

typedef struct fv_embedding fv_embedding;
typedef struct fv_bundle fv_bundle;

FAIRVEC_API const char* fv_version(void);
FAIRVEC_API const char* fv_status_name(fv_status status);
/* Message of the last failure on this thread; "" if none. */
FAIRVEC_API const char* fv_last_error(void);
/* Non-zero silences library warnings (they go to stderr otherwise). */
FAIRVEC_API void fv_set_quiet(int quiet);
FAIRVEC_API void fv_string_free(char* s);

/* --- embeddings -------------------------------------------------------- */

/* limit = 0 means the default of 22000 words. */
FAIRVEC_API fv_status fv_embedding_load(const char* path, size_t limit, fv_embedding** out);
FAIRVEC_API fv_status fv_embedding_save(const fv_embedding* emb, const char* path);
/* Deep copy. */
FAIRVEC_API fv_status fv_embedding_clone(const fv_embedding* emb, fv_embedding** out);
FAIRVEC_API void fv_embedding_free(fv_embedding* emb);
FAIRVEC_API size_t fv_embedding_size(const fv_embedding* emb);
FAIRVEC_API size_t fv_embedding_dim(const fv_embedding* emb);
/* Borrowed pointer, valid while `emb` lives; NULL when out of range. */
FAIRVEC_API const char* fv_embedding_word(const fv_embedding* emb, size_t index);
FAIRVEC_API fv_status fv_embedding_find(const fv_embedding* emb, const char* word, size_t* index);
/* Borrowed pointer to dim() doubles. */
FAIRVEC_API fv_status fv_embedding_row(const fv_embedding* emb, size_t index, const double** row);

/* --- word lists -------------------------------------------------------- */

FAIRVEC_API fv_status fv_bundle_load(const char* directory, int include_baseline,
                                     fv_bundle** out);
FAIRVEC_API void fv_bundle_free(fv_bundle* bundle);
FAIRVEC_API size_t fv_bundle_candidate_count(const fv_bundle* bundle);
FAIRVEC_API const char* fv_bundle_candidate(const fv_bundle* bundle, size_t index);
FAIRVEC_API size_t fv_bundle_weat_count(const fv_bundle* bundle);
FAIRVEC_API const char* fv_bundle_weat_name(const fv_bundle* bundle, size_t index);

/* --- metrics ----------------------------------------------------------- */

FAIRVEC_API fv_status fv_cosine(const double* u, const double* v, size_t dim, double* out);
FAIRVEC_API fv_status fv_l1_distance(const double* u, const double* v, size_t dim, double* out);
FAIRVEC_API fv_status fv_weat_effect_size(const fv_embedding* emb, const fv_bundle* bundle,
                                          size_t test_index, double* out);
/* Signed RIPA against the first principal direction of the bundle's pairs. */
FAIRVEC_API fv_status fv_ripa(const fv_embedding* emb, const fv_bundle* bundle,
                              const char* word, double* out);
FAIRVEC_API fv_status fv_evaluate_benchmark(const fv_embedding* emb, const char* dataset_path,
                                            double* score, double* coverage);

/* --- pipelines --------------------------------------------------------- */

/* config_json: a JSON object of run settings (NULL or "" for defaults).
 * reference may be NULL. Writes the audit report as JSON. */
FAIRVEC_API fv_status fv_audit(const fv_embedding* emb, const fv_embedding* reference,
                               const fv_bundle* bundle, const char* config_json,
                               const char* label, const char* embedding_path,
                               char** report_json);

/* method: "geo", "prob", "knn" or "composite". On FV_OK writes the mitigated
 * embedding and the checkpoint report (JSON lines). On FV_ERR_DIVERGENCE the
 * report is still written; *out is NULL. */
FAIRVEC_API fv_status fv_debias(const fv_embedding* emb, const fv_bundle* bundle,
                                const char* config_json, const char* method,
                                fv_embedding** out, char** report_jsonl);

/* Renders n audit-report JSON documents as an aligned table and CSV. */
FAIRVEC_API fv_status fv_render_report(const char* const* report_jsons, size_t n,
                                       char** table, char** csv);

/* Normalizes a partial config JSON: fills defaults, validates, and returns the
 * full object plus its hash (16 hex digits, caller frees both). */
FAIRVEC_API fv_status fv_config_resolve(const char* config_json, char** resolved_json,
                                        char** hash);

#ifdef __cplusplus
}
#endif

#endif /* FAIRVEC_FAIRVEC_H_ */
