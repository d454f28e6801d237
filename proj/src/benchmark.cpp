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

#include "fairvec/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fairvec/error.hpp"
#include "fairvec/linalg.hpp"

namespace fairvec {

SimilarityDataset parse_similarity_dataset(std::istream& in, std::string name) {
  SimilarityDataset ds;
  ds.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    SimilarityRow row;
    std::string extra;
    if (!(ls >> row.word1 >> row.word2 >> row.score) || (ls >> extra) ||
        !std::isfinite(row.score)) {
      throw Error(ErrorCode::kParse, ds.name + ":" + std::to_string(line_no) +
                                         ": expected 'word1 word2 score'");
    }
    ds.rows.push_back(std::move(row));
  }
  if (ds.rows.size() < 2) {
    throw Error(ErrorCode::kParse, ds.name + ": a similarity dataset needs at least 2 rows");
  }
  return ds;
}

SimilarityDataset load_similarity_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse_similarity_dataset(in, path.stem().string());
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kDomain, "spearman needs two equal-length inputs of size >= 2");
  }
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kUndefinedCorrelation, "spearman: constant input");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

BenchmarkResult evaluate(const EmbeddingSet& emb, const SimilarityDataset& dataset) {
  std::vector<double> human, model;
  for (const SimilarityRow& r : dataset.rows) {
    auto i = emb.find(r.word1);
    auto j = emb.find(r.word2);
    if (!i || !j) continue;
    human.push_back(r.score);
    model.push_back(cosine(emb.row(*i), emb.row(*j)));
  }
  BenchmarkResult out;
  out.covered = human.size();
  out.total = dataset.rows.size();
  out.coverage = out.total == 0 ? 0.0
                                : static_cast<double>(out.covered) /
                                      static_cast<double>(out.total);
  if (out.covered < 2) {
    throw Error(ErrorCode::kInsufficientCoverage,
                dataset.name + ": fewer than 2 pairs in vocabulary");
  }
  out.score = spearman(human, model);
  return out;
}

}  // namespace fairvec
