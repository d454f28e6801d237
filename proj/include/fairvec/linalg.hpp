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
#include <span>
#include <vector>

namespace fairvec {

using Vector = std::vector<double>;
using VectorView = std::span<const double>;

double dot(VectorView u, VectorView v);
double norm(VectorView v);
Vector normalized(VectorView v);

// u.v / (|u| |v|) clamped to [-1, 1]. Zero-norm input is a domain error.
double cosine(VectorView u, VectorView v);

double l1_distance(VectorView u, VectorView v);

// k orthonormal directions spanning a protected-attribute subspace.
// `variances` holds the eigenvalue (explained variance) of each direction
// when the subspace came from principal_components, and is empty otherwise.
struct BiasSubspace {
  std::vector<Vector> basis;
  std::vector<double> variances;

  std::size_t k() const noexcept { return basis.size(); }
  std::size_t dim() const noexcept { return basis.empty() ? 0 : basis[0].size(); }

  // Unit-normalizes `direction` into a one-component subspace.
  static BiasSubspace from_direction(VectorView direction);

  // Throws Error(kDomain) unless unit norm (1e-9) and orthogonal (1e-7).
  void validate() const;
};

// sum_j (v . b_j) b_j
Vector project_onto_subspace(VectorView v, const BiasSubspace& subspace);

// Eigen-decomposition of a dense symmetric n x n matrix (row-major) by cyclic
// Jacobi rotations. Values are sorted descending; vectors[j] pairs values[j].
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<Vector> vectors;
};
SymmetricEigen jacobi_eigen(std::vector<double> matrix, std::size_t n);

// Top-k principal directions of `vectors`, mean-centered unless only one
// vector is given. Works on the m x m Gram matrix when m < d and on the d x d
// covariance otherwise. Each component's largest-magnitude coordinate is
// positive.
BiasSubspace principal_components(std::span<const Vector> vectors, std::size_t k);

}  // namespace fairvec
