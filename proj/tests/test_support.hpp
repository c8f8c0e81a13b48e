// Copyright 2026 The cuntzsys Authors
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

#ifndef CUNTZSYS_TESTS_TEST_SUPPORT_HPP_
#define CUNTZSYS_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cuntzsys/fock.hpp"
#include "cuntzsys/linalg.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

inline HermitianMatrix random_hermitian(Index dim, Rng& rng) {
  return HermitianMatrix(random_matrix(dim, dim, rng));
}

// G G^* with G of shape dim x rank.
inline ComplexMatrix random_psd(Index dim, Index rank, Rng& rng) {
  const ComplexMatrix g = random_matrix(dim, rank, rng);
  return HermitianMatrix(g * g.adjoint()).matrix();
}

inline MatrixTuple random_tuple(int n, Index p, Rng& rng) {
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < n; ++i) ops.push_back(random_matrix(p, p, rng));
  return MatrixTuple(std::move(ops));
}

inline int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform(double lo, double hi, Rng& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// ||sum a_i a_i^*|| = norm^2.
inline MatrixTuple with_row_norm(const MatrixTuple& t, double norm) {
  const double current = std::sqrt(linalg::op_norm(t.row_gram()));
  return t.scaled(norm / current);
}

// The joint radius is homogeneous, so one evaluation fixes the scale.
inline MatrixTuple with_joint_radius(const MatrixTuple& t, double target,
                                     int depth) {
  return t.scaled(target / joint_numerical_radius(t, depth).lower);
}

// Smallest eigenvalue of the dense depth-d band operator.
inline double dense_band_min(const MatrixTuple& t, int depth) {
  const TruncatedFock space(t.size(), depth);
  const HermitianMatrix band = band_operator(CuntzIsometries(space), t);
  return linalg::herm_eigenvalues(band)(0);
}

}  // namespace cuntzsys::testing

#endif  // CUNTZSYS_TESTS_TEST_SUPPORT_HPP_
