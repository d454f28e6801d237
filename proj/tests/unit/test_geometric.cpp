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
#include <random>

#include "fairvec/bias_metrics.hpp"
#include "fairvec/error.hpp"
#include "fairvec/gender_pairs.hpp"
#include "fairvec/geometric.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fairvec;

namespace {

EmbeddingSet from_rows(const std::vector<std::pair<std::string, Vector>>& rows) {
  std::vector<std::string> vocab;
  std::vector<double> values;
  for (const auto& [w, v] : rows) {
    vocab.push_back(w);
    values.insert(values.end(), v.begin(), v.end());
  }
  return EmbeddingSet(vocab, values, rows.front().second.size());
}

}  // namespace

TEST_CASE("pair list parsing and validation") {
  std::istringstream in("# comment\nhe she\n\nman   woman # trailing\n");
  const auto p = parse_gender_pairs(in);
  REQUIRE(p.size() == 2);
  CHECK(p.pairs[1] == std::make_pair(std::string("man"), std::string("woman")));
  CHECK(p.words() == std::vector<std::string>{"he", "she", "man", "woman"});

  std::istringstream bad("he she extra\n");
  CHECK_THROWS_AS(parse_gender_pairs(bad), Error);
  CHECK_THROWS_AS((GenderPairSet{{{"he", "she"}, {"she", "her"}}}.validate()), Error);
  CHECK_THROWS_AS((GenderPairSet{{{"he", "he"}}}.validate()), Error);
  CHECK_THROWS_AS(GenderPairSet{}.validate(), Error);
}

TEST_CASE("resolve_pairs drops unresolvable pairs") {
  const auto emb = from_rows({{"he", {1, 0}}, {"she", {-1, 0}}, {"king", {1, 1}}});
  fairvec::testing::WarningCapture warnings;
  const auto r = resolve_pairs(GenderPairSet{{{"he", "she"}, {"king", "queen"}}}, emb);
  CHECK(r.size() == 1);
  CHECK(warnings.contains("queen"));
  try {
    resolve_pairs(GenderPairSet{{{"x", "y"}}}, emb);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingWord);
  }
}

TEST_CASE("one pair gives the normalized difference direction") {
  const auto emb = from_rows({{"a", {3, 1, 0}}, {"b", {1, 1, 0}}});
  const auto s = build_gender_subspace(emb, GenderPairSet{{{"a", "b"}}}, 1);
  CHECK(s.basis[0][0] == doctest::Approx(1.0));
  CHECK(s.basis[0][1] == doctest::Approx(0.0));
}

TEST_CASE("parallel differences give span(e1)") {
  const auto emb = from_rows({{"a1", {2, 5, 1}}, {"b1", {0, 5, 1}},
                              {"a2", {1, -2, 3}}, {"b2", {-3, -2, 3}}});
  const auto s = build_gender_subspace(emb, GenderPairSet{{{"a1", "b1"}, {"a2", "b2"}}}, 1);
  CHECK(std::abs(s.basis[0][0]) == doctest::Approx(1.0));
  CHECK(std::abs(s.basis[0][1]) < 1e-12);
  CHECK(std::abs(s.basis[0][2]) < 1e-12);
}

TEST_CASE("too few pairs is a rank error") {
  const auto emb = from_rows({{"a", {1, 0}}, {"b", {0, 1}}});
  try {
    build_gender_subspace(emb, GenderPairSet{{{"a", "b"}}}, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRank);
  }
}

TEST_CASE("subspace agrees with the dense oracle on pair-centered vectors") {
  const auto emb = fairvec::testing::random_embedding(20, 5, 44);
  GenderPairSet pairs;
  for (int i = 0; i < 10; i += 2) pairs.pairs.emplace_back("w" + std::to_string(i), "w" + std::to_string(i + 1));
  const auto s = build_gender_subspace(emb, pairs, 2);
  std::vector<Vector> centered;
  for (const auto& [a, b] : pairs.pairs) {
    const auto va = emb.row(emb.index_of(a));
    const auto vb = emb.row(emb.index_of(b));
    Vector half(emb.dim()), neg(emb.dim());
    for (std::size_t j = 0; j < emb.dim(); ++j) {
      half[j] = (va[j] - vb[j]) / 2.0;
      neg[j] = -half[j];
    }
    centered.push_back(half);
    centered.push_back(neg);
  }
  const auto want = fairvec::oracle::dense_pca(centered, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(std::abs(std::abs(dot(s.basis[c], want[c])) - 1.0) < 1e-9);
  }
  CHECK(s.variances[0] >= s.variances[1]);
}

TEST_CASE("debias examples") {
  const auto s = BiasSubspace::from_direction(Vector{1, 0, 0});
  const auto emb = from_rows({{"ortho", {0, 3, 4}}, {"mixed", {2, 0, 5}}, {"pure", {4, 0, 0}},
                              {"other", {7, 7, 7}}});
  fairvec::testing::WarningCapture warnings;
  const std::vector<std::string> targets{"ortho", "mixed", "pure"};
  const auto out = geometric_debias(emb, s, targets);
  CHECK(out.row(0)[1] == doctest::Approx(0.6));
  CHECK(out.row(0)[2] == doctest::Approx(0.8));
  CHECK(out.row(1)[0] == 0.0);
  CHECK(out.row(1)[2] == doctest::Approx(1.0));
  // Entirely inside the subspace: left alone with a warning.
  CHECK(out.row(2)[0] == 4.0);
  CHECK(warnings.contains("pure"));
  // Non-targets are bit-identical.
  CHECK(out.row(3)[0] == 7.0);
  CHECK(out.row(3)[2] == 7.0);
}

TEST_CASE("debias post-condition, idempotence and untouched rows") {
  const auto emb = fairvec::testing::random_embedding(200, 12, 5);
  GenderPairSet pairs;
  for (int i = 0; i < 8; i += 2) pairs.pairs.emplace_back("w" + std::to_string(i), "w" + std::to_string(i + 1));
  const auto s = build_gender_subspace(emb, pairs, 1);
  std::vector<std::string> targets;
  for (int i = 20; i < 200; ++i) targets.push_back("w" + std::to_string(i));
  const auto once = geometric_debias(emb, s, targets);
  const auto twice = geometric_debias(once, s, targets);
  for (const auto& t : targets) {
    CHECK(std::abs(ripa(once, s, t)) < 1e-6);
    const auto i = once.index_of(t);
    CHECK(norm(once.row(i)) == doctest::Approx(1.0));
    for (std::size_t j = 0; j < once.dim(); ++j) CHECK(std::abs(once.row(i)[j] - twice.row(i)[j]) < 1e-6);
  }
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < emb.dim(); ++j) CHECK(once.row(i)[j] == emb.row(i)[j]);
  }
}
