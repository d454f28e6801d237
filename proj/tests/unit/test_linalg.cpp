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

#include "fairvec/error.hpp"
#include "fairvec/linalg.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fairvec;

TEST_CASE("cosine examples") {
  CHECK(cosine(Vector{1, 0}, Vector{1, 0}) == doctest::Approx(1.0));
  CHECK(cosine(Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0));
  CHECK(cosine(Vector{1, 1}, Vector{1, 0}) == doctest::Approx(0.7071).epsilon(1e-4));
  CHECK_THROWS_AS(cosine(Vector{0, 0}, Vector{1, 0}), Error);
}

TEST_CASE("cosine stays within [-1, 1] for parallel vectors") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto v = fairvec::testing::random_vector(rng, 7, 1e3);
    Vector w = v;
    for (double& x : w) x *= 3.7;
    const double c = cosine(v, w);
    CHECK(c <= 1.0);
    CHECK(c >= -1.0);
    for (double& x : w) x = -x;
    CHECK(cosine(v, w) >= -1.0);
  }
}

TEST_CASE("l1 distance") {
  CHECK(l1_distance(Vector{0, 0}, Vector{0, 0}) == 0.0);
  CHECK(l1_distance(Vector{1, 2}, Vector{3, 0}) == 4.0);
  CHECK_THROWS_AS(l1_distance(Vector{1, 2}, Vector{1}), Error);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = fairvec::testing::random_vector(rng, 5);
    const auto b = fairvec::testing::random_vector(rng, 5);
    const auto c = fairvec::testing::random_vector(rng, 5);
    CHECK(l1_distance(a, b) == l1_distance(b, a));
    CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c) + 1e-12);
  }
}

TEST_CASE("projection examples") {
  BiasSubspace s{{{1, 0, 0}, {0, 1, 0}}, {}};
  const auto inside = project_onto_subspace(Vector{1, 0, 0}, s);
  CHECK(inside == Vector{1, 0, 0});
  const auto ortho = project_onto_subspace(Vector{0, 0, 5}, s);
  CHECK(norm(ortho) == 0.0);
  CHECK_THROWS_AS(project_onto_subspace(Vector{1, 2}, s), Error);
}

TEST_CASE("projection matches a normal-equations solve and satisfies its invariants") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 6;
    const auto raw = principal_components(
        std::vector<Vector>{fairvec::testing::random_vector(rng, d),
                            fairvec::testing::random_vector(rng, d),
                            fairvec::testing::random_vector(rng, d)},
        2);
    const auto v = fairvec::testing::random_vector(rng, d);
    const auto p = project_onto_subspace(v, raw);

    // Oracle: least squares onto span{b1, b2} via the 2x2 Gram system.
    const auto& b1 = raw.basis[0];
    const auto& b2 = raw.basis[1];
    double g11 = 0, g12 = 0, g22 = 0, r1 = 0, r2 = 0;
    for (std::size_t i = 0; i < d; ++i) {
      g11 += b1[i] * b1[i];
      g12 += b1[i] * b2[i];
      g22 += b2[i] * b2[i];
      r1 += b1[i] * v[i];
      r2 += b2[i] * v[i];
    }
    const double det = g11 * g22 - g12 * g12;
    const double c1 = (r1 * g22 - r2 * g12) / det;
    const double c2 = (g11 * r2 - g12 * r1) / det;
    for (std::size_t i = 0; i < d; ++i) CHECK(p[i] == doctest::Approx(c1 * b1[i] + c2 * b2[i]).epsilon(1e-7));

    Vector residual(d);
    for (std::size_t i = 0; i < d; ++i) residual[i] = v[i] - p[i];
    CHECK(std::abs(dot(residual, b1)) < 1e-7);
    CHECK(std::abs(dot(residual, b2)) < 1e-7);
    const auto pp = project_onto_subspace(p, raw);
    for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(pp[i] - p[i]) < 1e-7);
    const double lhs = dot(v, v);
    const double rhs = dot(p, p) + dot(residual, residual);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * lhs);
  }
}

TEST_CASE("subspace validation") {
  BiasSubspace ok = BiasSubspace::from_direction(Vector{3, 4});
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.basis[0][0] == doctest::Approx(0.6));
  BiasSubspace not_unit{{{2, 0}}, {}};
  CHECK_THROWS_AS(not_unit.validate(), Error);
  BiasSubspace not_ortho{{{1, 0}, {std::sqrt(0.5), std::sqrt(0.5)}}, {}};
  CHECK_THROWS_AS(not_ortho.validate(), Error);
}

TEST_CASE("principal component examples") {
  const auto single = principal_components(std::vector<Vector>{{-3, 4}}, 1);
  CHECK(single.basis[0][0] == doctest::Approx(-0.6));
  CHECK(single.basis[0][1] == doctest::Approx(0.8));

  const auto axis =
      principal_components(std::vector<Vector>{{1, 0}, {-1, 0}, {2, 0}, {-2, 0}}, 1);
  CHECK(axis.basis[0][0] == doctest::Approx(1.0));
  CHECK(axis.basis[0][1] == doctest::Approx(0.0));
}

TEST_CASE("principal component errors") {
  try {
    principal_components(std::vector<Vector>{{1, 0}}, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  try {
    // Collinear after centering: rank 1.
    principal_components(std::vector<Vector>{{1, 1, 0}, {2, 2, 0}, {3, 3, 0}}, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRank);
  }
}

TEST_CASE("principal components match the dense Jacobi oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 5, d = 4, k = 2;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(fairvec::testing::random_vector(rng, d));
    const auto got = principal_components(rows, k);
    const auto want = fairvec::oracle::dense_pca(rows, k);
    for (std::size_t c = 0; c < k; ++c) {
      const double sign = dot(got.basis[c], want[c]) < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < d; ++j) CHECK(std::abs(got.basis[c][j] - sign * want[c][j]) < 1e-6);
    }
  }
}

TEST_CASE("Gram path for m < d agrees with the covariance oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> rows;
    for (int i = 0; i < 6; ++i) rows.push_back(fairvec::testing::random_vector(rng, 12));
    const auto got = principal_components(rows, 3);
    const auto want = fairvec::oracle::dense_pca(rows, 3);
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(std::abs(std::abs(dot(got.basis[c], want[c])) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("components are orthonormal, sign-normalized, variance non-increasing") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> rows;
    for (int i = 0; i < 9; ++i) rows.push_back(fairvec::testing::random_vector(rng, 5));
    const auto s = principal_components(rows, 4);
    CHECK_NOTHROW(s.validate());
    for (std::size_t c = 0; c + 1 < s.k(); ++c) CHECK(s.variances[c] >= s.variances[c + 1]);
    for (const auto& b : s.basis) {
      std::size_t arg = 0;
      for (std::size_t j = 1; j < b.size(); ++j) {
        if (std::abs(b[j]) > std::abs(b[arg])) arg = j;
      }
      CHECK(b[arg] > 0.0);
    }
  }
}

TEST_CASE("jacobi_eigen reconstructs the matrix") {
  std::mt19937_64 rng(17);
  const std::size_t n = 6;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      a[i * n + j] = a[j * n + i] = std::normal_distribution<double>(0, 1)(rng);
    }
  }
  const auto e = jacobi_eigen(a, n);
  const auto o = fairvec::oracle::max_pivot_jacobi(a, n);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(e.values[i] == doctest::Approx(o.values[i]).epsilon(1e-10));
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t c = 0; c < n; ++c) s += e.values[c] * e.vectors[c][i] * e.vectors[c][j];
      CHECK(s == doctest::Approx(a[i * n + j]).epsilon(1e-10));
    }
  }
}
