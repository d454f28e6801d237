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

#include "fairvec/bias_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fairvec/diagnostics.hpp"
#include "fairvec/error.hpp"
#include "fairvec/parallel.hpp"

namespace fairvec {
namespace {

std::vector<VectorView> resolve_set(const EmbeddingSet& emb,
                                    const std::vector<std::string>& words,
                                    const std::string& test, const char* label) {
  std::vector<VectorView> out;
  for (const std::string& w : words) {
    if (auto i = emb.find(w)) {
      out.push_back(emb.row(*i));
    } else {
      warn("WEAT '" + test + "' set " + label + ": dropping unknown word '" + w + "'");
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kMissingWord,
                "WEAT '" + test + "' set " + label + " has no words in the vocabulary");
  }
  return out;
}

double mean_cosine(VectorView w, std::span<const VectorView> set) {
  double s = 0.0;
  for (VectorView v : set) s += cosine(w, v);
  return s / static_cast<double>(set.size());
}

}  // namespace

double weat_association(VectorView w, std::span<const VectorView> a,
                        std::span<const VectorView> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kDomain, "weat_association: empty attribute set");
  }
  return mean_cosine(w, a) - mean_cosine(w, b);
}

double weat_effect_size(const EmbeddingSet& emb, const WeatTest& test) {
  const auto x = resolve_set(emb, test.x, test.name, "X");
  const auto y = resolve_set(emb, test.y, test.name, "Y");
  const auto a = resolve_set(emb, test.a, test.name, "A");
  const auto b = resolve_set(emb, test.b, test.name, "B");

  std::vector<double> sx, sy;
  for (VectorView w : x) sx.push_back(weat_association(w, a, b));
  for (VectorView w : y) sy.push_back(weat_association(w, a, b));

  // Partial sums per side keep the result exactly antisymmetric under X <-> Y.
  auto sum = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e;
    return s;
  };
  const double sum_x = sum(sx);
  const double sum_y = sum(sy);
  const double nx = static_cast<double>(sx.size());
  const double ny = static_cast<double>(sy.size());
  const double mean_all = (sum_x + sum_y) / (nx + ny);
  auto sq_dev = [mean_all](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += (e - mean_all) * (e - mean_all);
    return s;
  };
  const double stddev = std::sqrt((sq_dev(sx) + sq_dev(sy)) / (nx + ny));
  if (!(stddev > 1e-12)) {
    throw Error(ErrorCode::kDegenerateTest,
                "WEAT '" + test.name + "': association scores have zero deviation");
  }
  return (sum_x / nx - sum_y / ny) / stddev;
}

double ripa(const EmbeddingSet& emb, const BiasSubspace& relation,
            std::string_view word) {
  if (relation.k() != 1) {
    throw Error(ErrorCode::kDomain, "ripa needs a one-component relation vector");
  }
  return dot(emb.row(emb.index_of(word)), relation.basis[0]);
}

std::vector<std::string> default_candidate_pool(const EmbeddingSet& emb,
                                                std::span<const std::string> excluded) {
  std::unordered_set<std::string> skip(excluded.begin(), excluded.end());
  std::vector<std::string> out;
  out.reserve(emb.size());
  for (const std::string& w : emb.vocab()) {
    if (skip.count(w) == 0) out.push_back(w);
  }
  return out;
}

BiasedNeighborSets extract_biased_neighbor_sets(const EmbeddingSet& emb,
                                                const BiasSubspace& relation,
                                                std::span<const std::string> candidates,
                                                const GenderPairSet& definitional,
                                                std::size_t n_biased) {
  if (relation.k() != 1) {
    throw Error(ErrorCode::kDomain, "socially-biased extraction needs a one-component relation");
  }
  if (n_biased < 2 || n_biased % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_biased must be even and >= 2");
  }
  const Vector& b = relation.basis[0];

  // Orientation: count the male-coded pair words on each side.
  int positive_votes = 0;
  double margin = 0.0;
  for (const auto& [m, f] : definitional.pairs) {
    auto im = emb.find(m);
    auto jf = emb.find(f);
    if (im) {
      const double s = dot(emb.row(*im), b);
      positive_votes += s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
      margin += s;
    }
    if (jf) margin -= dot(emb.row(*jf), b);
  }
  const bool male_positive = positive_votes != 0 ? positive_votes > 0 : margin >= 0.0;

  std::vector<ScoredWord> pos, neg;
  std::unordered_set<std::size_t> seen;
  for (const std::string& w : candidates) {
    const std::size_t i = emb.index_of(w);
    if (!seen.insert(i).second) continue;
    const double s = dot(emb.row(i), b);
    if (s > 0.0) {
      pos.push_back({i, w, s});
    } else if (s < 0.0) {
      neg.push_back({i, w, s});
    }
  }
  auto by_magnitude = [](const ScoredWord& l, const ScoredWord& r) {
    const double al = std::abs(l.score), ar = std::abs(r.score);
    return al != ar ? al > ar : l.index < r.index;
  };
  const std::size_t half = n_biased / 2;
  if (pos.size() < half || neg.size() < half) {
    throw Error(ErrorCode::kInsufficientCandidates,
                "need " + std::to_string(half) + " candidates on each side of the "
                "relation vector, have " + std::to_string(pos.size()) + " positive and " +
                std::to_string(neg.size()) + " negative");
  }
  std::partial_sort(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(half),
                    pos.end(), by_magnitude);
  std::partial_sort(neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(half),
                    neg.end(), by_magnitude);
  pos.resize(half);
  neg.resize(half);

  BiasedNeighborSets out;
  out.relation = relation;
  out.male = male_positive ? std::move(pos) : std::move(neg);
  out.female = male_positive ? std::move(neg) : std::move(pos);
  return out;
}

double neighborhood_bias(const EmbeddingSet& emb, const BiasedNeighborSets& sets,
                         std::string_view word, std::size_t k) {
  const std::size_t target = emb.index_of(word);
  const VectorView t = emb.row(target);

  struct Candidate {
    double sim;
    std::size_t index;
    bool male;
  };
  std::vector<Candidate> pool;
  pool.reserve(sets.male.size() + sets.female.size());
  for (const ScoredWord& w : sets.male) {
    if (w.index != target) pool.push_back({cosine(t, emb.row(w.index)), w.index, true});
  }
  for (const ScoredWord& w : sets.female) {
    if (w.index != target) pool.push_back({cosine(t, emb.row(w.index)), w.index, false});
  }
  if (k == 0 || k > pool.size()) {
    throw Error(ErrorCode::kDomain, "neighborhood k=" + std::to_string(k) +
                                        " outside [1, " + std::to_string(pool.size()) + "]");
  }
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(),
                    [](const Candidate& l, const Candidate& r) {
                      return l.sim != r.sim ? l.sim > r.sim : l.index < r.index;
                    });
  std::size_t male = 0;
  for (std::size_t i = 0; i < k; ++i) male += pool[i].male ? 1 : 0;
  return static_cast<double>(male) / static_cast<double>(k);
}

double mean_abs_ripa(const EmbeddingSet& emb, const BiasSubspace& relation,
                     std::span<const std::string> words) {
  if (words.empty()) throw Error(ErrorCode::kInvalidArgument, "mean_abs_ripa: no words");
  double s = 0.0;
  for (const std::string& w : words) s += std::abs(ripa(emb, relation, w));
  return s / static_cast<double>(words.size());
}

double mean_neighborhood_deviation(const EmbeddingSet& emb,
                                   const BiasedNeighborSets& sets,
                                   std::span<const std::string> words, std::size_t k,
                                   std::size_t threads) {
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mean_neighborhood_deviation: no words");
  }
  std::vector<double> dev(words.size());
  parallel_for(words.size(), threads, [&](std::size_t i) {
    dev[i] = std::abs(0.5 - neighborhood_bias(emb, sets, words[i], k));
  });
  double s = 0.0;
  for (double d : dev) s += d;
  return s / static_cast<double>(words.size());
}

}  // namespace fairvec
