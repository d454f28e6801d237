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

#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "fairvec/fairvec.h"
#include "json.hpp"
#include "synthetic.hpp"
#include "test_util.hpp"

namespace {

struct Fixture {
  fairvec::testing::TempDir dir{"capi"};
  fv_embedding* emb = nullptr;
  fv_bundle* bundle = nullptr;

  Fixture() {
    fairvec::testing::SyntheticSpec spec;
    spec.vocab = 300;
    spec.dim = 20;
    spec.biased_per_side = 60;
    spec.targets = 40;
    spec.similarity_rows = 80;
    fairvec::testing::write_synthetic_suite(fairvec::testing::make_synthetic_suite(spec),
                                            dir.path());
    fv_set_quiet(1);
    REQUIRE(fv_embedding_load((dir / "embedding.vec").c_str(), 0, &emb) == FV_OK);
    REQUIRE(fv_bundle_load(dir.path().c_str(), 0, &bundle) == FV_OK);
  }
  ~Fixture() {
    fv_embedding_free(emb);
    fv_bundle_free(bundle);
    fv_set_quiet(0);
  }

  std::string config(const std::string& extra = "") const {
    return R"({"n_biased": 60, "neighborhood_k": 20, "iterations": 20, "eval_every": 10,)"
           R"( "batch_size": 16, "benchmarks": [")" +
           (dir / "similarity.txt").string() + "\"]" + extra + "}";
  }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  fv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strlen(fv_version()) > 0);
  CHECK(std::string(fv_status_name(FV_OK)) == "ok");
  CHECK(std::string(fv_status_name(FV_ERR_INTERNAL)) == "internal");
  CHECK(std::strlen(fv_status_name(FV_ERR_MISSING_WORD)) > 0);
}

TEST_CASE("null arguments and bad paths are reported, not crashed on") {
  fv_embedding* e = nullptr;
  CHECK(fv_embedding_load(nullptr, 0, &e) == FV_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fv_last_error()).find("path") != std::string::npos);
  CHECK(fv_embedding_load("/nonexistent/file.vec", 0, &e) == FV_ERR_IO);
  CHECK(e == nullptr);
  CHECK(fv_embedding_size(nullptr) == 0);
  CHECK(fv_embedding_word(nullptr, 0) == nullptr);
  double out = 0;
  CHECK(fv_cosine(nullptr, nullptr, 3, &out) == FV_ERR_INVALID_ARGUMENT);
  fv_bundle* b = nullptr;
  CHECK(fv_bundle_load("/nonexistent/bundle", 0, &b) == FV_ERR_IO);
  fv_embedding_free(nullptr);
  fv_bundle_free(nullptr);
}

TEST_CASE("vector helpers") {
  const double u[] = {1, 0, 0};
  const double v[] = {0, 2, 0};
  double out = -1;
  REQUIRE(fv_cosine(u, v, 3, &out) == FV_OK);
  CHECK(out == doctest::Approx(0.0));
  REQUIRE(fv_l1_distance(u, v, 3, &out) == FV_OK);
  CHECK(out == doctest::Approx(3.0));
  const double z[] = {0, 0, 0};
  CHECK(fv_cosine(u, z, 3, &out) == FV_ERR_DOMAIN);
}

TEST_CASE("embedding and bundle accessors") {
  Fixture f;
  CHECK(fv_embedding_size(f.emb) == 300);
  CHECK(fv_embedding_dim(f.emb) == 20);
  size_t idx = 0;
  REQUIRE(fv_embedding_find(f.emb, "he0", &idx) == FV_OK);
  CHECK(std::string(fv_embedding_word(f.emb, idx)) == "he0");
  CHECK(fv_embedding_find(f.emb, "nope", &idx) == FV_ERR_MISSING_WORD);
  const double* row = nullptr;
  REQUIRE(fv_embedding_row(f.emb, idx, &row) == FV_OK);
  CHECK(row[0] == doctest::Approx(1.0));
  CHECK(fv_embedding_row(f.emb, 300, &row) != FV_OK);
  CHECK(fv_embedding_word(f.emb, 300) == nullptr);

  fv_embedding* copy = nullptr;
  REQUIRE(fv_embedding_clone(f.emb, &copy) == FV_OK);
  const std::string path = (f.dir / "copy.vec").string();
  REQUIRE(fv_embedding_save(copy, path.c_str()) == FV_OK);
  fv_embedding_free(copy);
  fv_embedding* reloaded = nullptr;
  REQUIRE(fv_embedding_load(path.c_str(), 10, &reloaded) == FV_OK);
  CHECK(fv_embedding_size(reloaded) == 10);
  fv_embedding_free(reloaded);

  CHECK(fv_bundle_candidate_count(f.bundle) == 40);
  CHECK(std::string(fv_bundle_candidate(f.bundle, 0)) == "job0");
  CHECK(fv_bundle_candidate(f.bundle, 40) == nullptr);
  CHECK(fv_bundle_weat_count(f.bundle) == 1);
  CHECK(fv_bundle_weat_name(f.bundle, 0) != nullptr);
}

TEST_CASE("metrics through the C interface") {
  Fixture f;
  double es = 0;
  REQUIRE(fv_weat_effect_size(f.emb, f.bundle, 0, &es) == FV_OK);
  CHECK(std::isfinite(es));
  CHECK(std::abs(es) <= 2.0);
  CHECK(fv_weat_effect_size(f.emb, f.bundle, 5, &es) == FV_ERR_INVALID_ARGUMENT);
  double r_he = 0, r_she = 0;
  REQUIRE(fv_ripa(f.emb, f.bundle, "he0", &r_he) == FV_OK);
  REQUIRE(fv_ripa(f.emb, f.bundle, "she0", &r_she) == FV_OK);
  CHECK(r_he == doctest::Approx(-r_she).epsilon(1e-9));
  CHECK(fv_ripa(f.emb, f.bundle, "nope", &r_he) == FV_ERR_MISSING_WORD);
  double score = 0, coverage = 0;
  REQUIRE(fv_evaluate_benchmark(f.emb, (f.dir / "similarity.txt").c_str(), &score, &coverage) ==
          FV_OK);
  CHECK(coverage == 1.0);
  CHECK(score > 0.9);
}

TEST_CASE("config resolution") {
  char* json = nullptr;
  char* hash = nullptr;
  REQUIRE(fv_config_resolve(R"({"seed": 3})", &json, &hash) == FV_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["seed"] == 3);
  CHECK(j["limit"] == 22000);
  CHECK(take(hash).size() == 16);
  CHECK(fv_config_resolve(R"({"unknown": 1})", &json, &hash) == FV_ERR_INVALID_ARGUMENT);
  CHECK(fv_config_resolve("{", &json, &hash) == FV_ERR_PARSE);
  REQUIRE(fv_config_resolve(nullptr, &json, &hash) == FV_OK);
  take(json);
  take(hash);
}

TEST_CASE("audit, debias and render") {
  Fixture f;
  char* original = nullptr;
  REQUIRE(fv_audit(f.emb, nullptr, f.bundle, f.config().c_str(), "Original", "emb.vec",
                   &original) == FV_OK);
  const std::string original_json = take(original);
  CHECK(nlohmann::json::parse(original_json)["ripa_mean_abs"].get<double>() > 0.1);

  fv_embedding* geo = nullptr;
  char* report = nullptr;
  REQUIRE(fv_debias(f.emb, f.bundle, f.config().c_str(), "geo", &geo, &report) == FV_OK);
  CHECK(take(report).find("geometric") != std::string::npos);
  char* geo_audit = nullptr;
  REQUIRE(fv_audit(geo, f.emb, f.bundle, f.config().c_str(), "Geometric", "geo.vec",
                   &geo_audit) == FV_OK);
  const std::string geo_json = take(geo_audit);
  CHECK(nlohmann::json::parse(geo_json)["ripa_mean_abs"].get<double>() < 1e-6);
  fv_embedding_free(geo);

  const char* docs[] = {geo_json.c_str(), original_json.c_str()};
  char* table = nullptr;
  char* csv = nullptr;
  REQUIRE(fv_render_report(docs, 2, &table, &csv) == FV_OK);
  const std::string t = take(table);
  CHECK(t.find("Original") < t.find("Geometric"));
  CHECK(take(csv).rfind("method,metric,value", 0) == 0);
  const char* bad[] = {"{}"};
  CHECK(fv_render_report(bad, 1, &table, &csv) == FV_ERR_PARSE);

  fv_embedding* out = nullptr;
  CHECK(fv_debias(f.emb, f.bundle, f.config().c_str(), "bogus", &out, &report) ==
        FV_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("divergence still returns the report") {
  Fixture f;
  fv_embedding* out = nullptr;
  char* report = nullptr;
  const auto cfg = f.config(R"(, "learning_rate": 1e306)");
  CHECK(fv_debias(f.emb, f.bundle, cfg.c_str(), "prob", &out, &report) == FV_ERR_DIVERGENCE);
  CHECK(out == nullptr);
  CHECK(take(report).find("diverged") != std::string::npos);
}
