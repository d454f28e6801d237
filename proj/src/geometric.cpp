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

#include "fairvec/geometric.hpp"

#include "fairvec/diagnostics.hpp"
#include "fairvec/error.hpp"

namespace fairvec {

BiasSubspace build_gender_subspace(const EmbeddingSet& emb,
                                   const GenderPairSet& pairs, std::size_t k) {
  const GenderPairSet resolved = resolve_pairs(pairs, emb);
  if (resolved.size() < k) {
    throw Error(ErrorCode::kRank, "need at least " + std::to_string(k) +
                                      " resolvable gender pairs, have " +
                                      std::to_string(resolved.size()));
  }
  std::vector<Vector> centered;
  centered.reserve(resolved.size() * 2);
  for (const auto& [a, b] : resolved.pairs) {
    const auto va = emb.row(emb.index_of(a));
    const auto vb = emb.row(emb.index_of(b));
    Vector half(emb.dim());
    for (std::size_t j = 0; j < half.size(); ++j) half[j] = 0.5 * (va[j] - vb[j]);
    Vector neg = half;
    for (double& x : neg) x = -x;
    centered.push_back(std::move(half));
    centered.push_back(std::move(neg));
  }
  return principal_components(centered, k);
}

EmbeddingSet geometric_debias(const EmbeddingSet& emb, const BiasSubspace& subspace,
                              std::span<const std::string> targets) {
  subspace.validate();
  if (subspace.dim() != emb.dim()) {
    throw Error(ErrorCode::kDomain, "subspace dimension does not match embedding");
  }
  EmbeddingSet out = snapshot(emb);
  for (const std::string& word : targets) {
    const std::size_t i = emb.index_of(word);
    const Vector proj = project_onto_subspace(emb.row(i), subspace);
    Vector residual(emb.row(i).begin(), emb.row(i).end());
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= proj[j];
    const double n = norm(residual);
    if (n < 1e-9) {
      warn("geometric debias: '" + word + "' lies inside the bias subspace, skipped");
      continue;
    }
    auto row = out.row(i);
    for (std::size_t j = 0; j < residual.size(); ++j) row[j] = residual[j] / n;
  }
  return out;
}

}  // namespace fairvec
