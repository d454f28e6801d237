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

#include <span>
#include <string>

#include "fairvec/embedding_store.hpp"
#include "fairvec/gender_pairs.hpp"
#include "fairvec/linalg.hpp"

namespace fairvec {

// Top-k principal directions of the pair-centered vectors: every resolvable
// pair (a, b) contributes +(v_a - v_b)/2 and -(v_a - v_b)/2. Unresolvable pairs
// are dropped with a warning. Throws Error(kRank) when fewer than k pairs
// remain or they do not span k directions.
BiasSubspace build_gender_subspace(const EmbeddingSet& emb,
                                   const GenderPairSet& pairs, std::size_t k = 1);

// Hard neutralization: every target row becomes (v - v_B) / |v - v_B|. Rows
// that lie inside the subspace (residual norm < 1e-9) are skipped with a
// warning; all other rows are copied bit-for-bit.
EmbeddingSet geometric_debias(const EmbeddingSet& emb, const BiasSubspace& subspace,
                              std::span<const std::string> targets);

}  // namespace fairvec
