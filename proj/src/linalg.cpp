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

#include "fairvec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairvec/error.hpp"

namespace fairvec {
namespace {

void require_same_dim(VectorView u, VectorView v, const char* op) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDomain,
                std::string(op) + ": dimension mismatch (" +
                    std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()) + ")");
  }
}

void fix_sign(Vector& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  if (v[arg] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

double dot(VectorView u, VectorView v) {
  require_same_dim(u, v, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double norm(VectorView v) { return std::sqrt(dot(v, v)); }

Vector normalized(VectorView v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw Error(ErrorCode::kDomain, "cannot normalize a zero vector");
  Vector out(v.begin(), v.end());
  for (double& x : out) x /= n;
  return out;
}

double cosine(VectorView u, VectorView v) {
  require_same_dim(u, v, "cosine");
  const double nu = norm(u);
  const double nv = norm(v);
  if (!(nu > 0.0) || !(nv > 0.0)) {
    throw Error(ErrorCode::kDomain, "cosine: zero-norm input");
  }
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

double l1_distance(VectorView u, VectorView v) {
  require_same_dim(u, v, "l1_distance");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::abs(u[i] - v[i]);
  return s;
}

BiasSubspace BiasSubspace::from_direction(VectorView direction) {
  BiasSubspace b;
  b.basis.push_back(normalized(direction));
  return b;
}

void BiasSubspace::validate() const {
  if (basis.empty()) throw Error(ErrorCode::kDomain, "empty subspace basis");
  const std::size_t d = basis[0].size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != d) {
      throw Error(ErrorCode::kDomain, "subspace basis vectors differ in dimension");
    }
    if (std::abs(norm(basis[i]) - 1.0) > 1e-9) {
      throw Error(ErrorCode::kDomain, "subspace basis vector is not unit length");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(dot(basis[i], basis[j])) > 1e-7) {
        throw Error(ErrorCode::kDomain, "subspace basis is not orthogonal");
      }
    }
  }
}

Vector project_onto_subspace(VectorView v, const BiasSubspace& subspace) {
  Vector out(v.size(), 0.0);
  for (const Vector& b : subspace.basis) {
    const double c = dot(v, b);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * b[i];
  }
  return out;
}

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) {
    throw Error(ErrorCode::kDomain, "jacobi_eigen: matrix is not n x n");
  }
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<double>& m, std::size_t r, std::size_t c) -> double& {
    return m[r * n + c];
  };

  const double scale = std::max(
      1e-300, std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0)));
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += at(a, p, q) * at(a, p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J, columns then rows.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i] > a[j * n + j];
  });
  SymmetricEigen out;
  for (std::size_t idx : order) {
    out.values.push_back(a[idx * n + idx]);
    Vector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

BiasSubspace principal_components(std::span<const Vector> vectors, std::size_t k) {
  const std::size_t m = vectors.size();
  if (k == 0) throw Error(ErrorCode::kDomain, "principal_components: k must be >= 1");
  if (m < k) {
    throw Error(ErrorCode::kDomain,
                "principal_components: k=" + std::to_string(k) +
                    " exceeds the number of input vectors (" + std::to_string(m) + ")");
  }
  const std::size_t d = vectors[0].size();
  for (const Vector& v : vectors) {
    if (v.size() != d) {
      throw Error(ErrorCode::kDomain, "principal_components: ragged input");
    }
  }

  if (m == 1) {
    const double n = norm(vectors[0]);
    if (!(n > 0.0)) throw Error(ErrorCode::kRank, "principal_components: zero input");
    BiasSubspace out;
    Vector c = normalized(vectors[0]);
    fix_sign(c);
    out.basis.push_back(std::move(c));
    out.variances.push_back(n * n);
    return out;
  }

  Vector mean(d, 0.0);
  for (const Vector& v : vectors) {
    for (std::size_t j = 0; j < d; ++j) mean[j] += v[j];
  }
  for (double& x : mean) x /= static_cast<double>(m);
  std::vector<Vector> centered(vectors.begin(), vectors.end());
  for (Vector& v : centered) {
    for (std::size_t j = 0; j < d; ++j) v[j] -= mean[j];
  }
  const double denom = static_cast<double>(m - 1);

  BiasSubspace out;
  std::vector<double> eigenvalues;
  if (m < d) {
    std::vector<double> gram(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        gram[i * m + j] = gram[j * m + i] = dot(centered[i], centered[j]);
      }
    }
    SymmetricEigen eig = jacobi_eigen(std::move(gram), m);
    for (std::size_t c = 0; c < k; ++c) {
      Vector comp(d, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        const double w = eig.vectors[c][i];
        for (std::size_t j = 0; j < d; ++j) comp[j] += w * centered[i][j];
      }
      eigenvalues.push_back(eig.values[c]);
      out.basis.push_back(std::move(comp));
    }
  } else {
    std::vector<double> cov(d * d, 0.0);
    for (const Vector& v : centered) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) cov[i * d + j] += v[i] * v[j];
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < i; ++j) cov[i * d + j] = cov[j * d + i];
    }
    SymmetricEigen eig = jacobi_eigen(std::move(cov), d);
    for (std::size_t c = 0; c < k; ++c) {
      eigenvalues.push_back(eig.values[c]);
      out.basis.push_back(eig.vectors[c]);
    }
  }

  const double top = eigenvalues.empty() ? 0.0 : eigenvalues[0];
  for (std::size_t c = 0; c < k; ++c) {
    if (!(top > 0.0) || eigenvalues[c] <= 1e-10 * top) {
      throw Error(ErrorCode::kRank,
                  "principal_components: input rank is below k=" + std::to_string(k));
    }
    out.basis[c] = normalized(out.basis[c]);
    fix_sign(out.basis[c]);
    out.variances.push_back(eigenvalues[c] / denom);
  }
  return out;
}

}  // namespace fairvec
