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
#include <string>
#include <string_view>
#include <vector>

#include "fairvec/trainer.hpp"

namespace fairvec {

// Every experiment knob in one serializable object. JSON input may set any
// subset of keys; unknown keys are rejected.
struct RunConfig {
  std::string bundle = "data";
  std::size_t limit = 22000;
  std::uint64_t seed = 0;
  std::string method = "composite";
  std::size_t iterations = 1000;
  std::size_t batch_size = 64;
  double learning_rate = 0.01;
  std::size_t neighbor_k = 10;
  std::size_t negatives = 5;
  std::size_t eval_every = 100;
  double early_stop_drop = 0.05;
  std::string loss_form = "absolute";
  std::size_t neighborhood_k = 100;
  std::size_t n_biased = 1000;
  std::size_t subspace_k = 1;
  std::size_t threads = 1;
  bool include_baseline = false;
  std::string ripa_scope = "candidates";  // or "vocab"
  std::string frequency_table;
  std::vector<std::string> benchmarks;

  // Merges the keys present in `json` over `base`.
  static RunConfig from_json(std::string_view json, const RunConfig& base);
  static RunConfig from_json(std::string_view json);
  std::string to_json() const;
  // FNV-1a 64 of to_json(), as 16 hex digits.
  std::string hash() const;

  void validate() const;
  TrainConfig train_config() const;
};

}  // namespace fairvec
