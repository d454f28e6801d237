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

#include "fairvec/config.hpp"

#include <cstdio>
#include <set>

#include "json.hpp"

namespace fairvec {
namespace {

using nlohmann::ordered_json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "bundle",     "limit",          "seed",           "method",       "iterations",
      "batch_size", "learning_rate",  "neighbor_k",     "negatives",    "eval_every",
      "early_stop_drop", "loss_form", "neighborhood_k", "n_biased",     "subspace_k",
      "threads",    "include_baseline", "ripa_scope",   "frequency_table", "benchmarks"};
  return keys;
}

template <typename T>
void read(const ordered_json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig RunConfig::from_json(std::string_view text) { return from_json(text, RunConfig{}); }

RunConfig RunConfig::from_json(std::string_view text, const RunConfig& base) {
  RunConfig c = base;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (known_keys().count(key) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "config: unknown key '" + key + "'");
    }
  }
  try {
    read(j, "bundle", c.bundle);
    read(j, "limit", c.limit);
    read(j, "seed", c.seed);
    read(j, "method", c.method);
    read(j, "iterations", c.iterations);
    read(j, "batch_size", c.batch_size);
    read(j, "learning_rate", c.learning_rate);
    read(j, "neighbor_k", c.neighbor_k);
    read(j, "negatives", c.negatives);
    read(j, "eval_every", c.eval_every);
    read(j, "early_stop_drop", c.early_stop_drop);
    read(j, "loss_form", c.loss_form);
    read(j, "neighborhood_k", c.neighborhood_k);
    read(j, "n_biased", c.n_biased);
    read(j, "subspace_k", c.subspace_k);
    read(j, "threads", c.threads);
    read(j, "include_baseline", c.include_baseline);
    read(j, "ripa_scope", c.ripa_scope);
    read(j, "frequency_table", c.frequency_table);
    read(j, "benchmarks", c.benchmarks);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
  }
  return c;
}

std::string RunConfig::to_json() const {
  ordered_json j;
  j["bundle"] = bundle;
  j["limit"] = limit;
  j["seed"] = seed;
  j["method"] = method;
  j["iterations"] = iterations;
  j["batch_size"] = batch_size;
  j["learning_rate"] = learning_rate;
  j["neighbor_k"] = neighbor_k;
  j["negatives"] = negatives;
  j["eval_every"] = eval_every;
  j["early_stop_drop"] = early_stop_drop;
  j["loss_form"] = loss_form;
  j["neighborhood_k"] = neighborhood_k;
  j["n_biased"] = n_biased;
  j["subspace_k"] = subspace_k;
  j["threads"] = threads;
  j["include_baseline"] = include_baseline;
  j["ripa_scope"] = ripa_scope;
  j["frequency_table"] = frequency_table;
  j["benchmarks"] = benchmarks;
  return j.dump();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::kInvalidArgument, "config: " + m); };
  if (limit < 1) fail("limit must be >= 1");
  if (loss_form != "absolute" && loss_form != "squared") fail("loss_form must be absolute or squared");
  if (ripa_scope != "candidates" && ripa_scope != "vocab") fail("ripa_scope must be candidates or vocab");
  if (n_biased < 2 || n_biased % 2 != 0) fail("n_biased must be even and >= 2");
  if (neighborhood_k < 1 || neighborhood_k > n_biased) fail("neighborhood_k must be in [1, n_biased]");
  if (subspace_k < 1) fail("subspace_k must be >= 1");
  train_config().validate();
}

TrainConfig RunConfig::train_config() const {
  TrainConfig t;
  if (method != "geo") t.method = parse_method(method);
  t.iterations = iterations;
  t.batch_size = batch_size;
  t.learning_rate = learning_rate;
  t.neighbor_k = neighbor_k;
  t.eval_every = eval_every;
  t.early_stop_drop = early_stop_drop;
  t.seed = seed;
  t.loss_form = loss_form == "squared" ? LossForm::kSquared : LossForm::kAbsolute;
  t.sgns.k_negatives = negatives;
  t.threads = threads;
  return t;
}

}  // namespace fairvec
