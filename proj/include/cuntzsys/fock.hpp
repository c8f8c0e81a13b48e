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

#ifndef CUNTZSYS_FOCK_HPP_
#define CUNTZSYS_FOCK_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

#include "cuntzsys/linalg.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys {

using SparseRealMatrix = Eigen::SparseMatrix<double>;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Index kDefaultFockCapacity = 200000;
// Cap on dim * p for anything that materializes a dense band operator.
inline constexpr Index kDefaultDenseCapacity = 20000;

// Depth-d truncation of l^2 over n letters. Basis vector e_k has children
// e_{kn+i}, i = 1..n; e_0 is the vacuum. Indices of level <= d form the
// contiguous range [0, dim).
class TruncatedFock {
 public:
  TruncatedFock(int letters, int depth, Index capacity = kDefaultFockCapacity);

  int letters() const { return letters_; }
  int depth() const { return depth_; }
  Index dim() const { return dim_; }

  // First flat index at the given level; level_begin(depth + 1) == dim().
  Index level_begin(int level) const;
  int level(Index k) const;
  Index child(Index k, int letter) const {
    return k * letters_ + letter;
  }

 private:
  int letters_;
  int depth_;
  Index dim_;
};

// S_i(e_k) = e_{kn+i} compressed to the truncation: columns of top-level
// basis vectors are zero, so S_i^* S_j = delta_ij P_{<d} exactly.
class CuntzIsometries {
 public:
  explicit CuntzIsometries(const TruncatedFock& space);

  const TruncatedFock& space() const { return space_; }
  // letter is 1-based.
  const SparseRealMatrix& isometry(int letter) const {
    return s_[letter - 1];
  }

  struct Triplets {
    std::vector<Index> row;
    std::vector<Index> col;
    std::vector<double> value;
  };
  Triplets triplets(int letter) const;

 private:
  TruncatedFock space_;
  std::vector<SparseRealMatrix> s_;
};

TruncatedFock make_fock(int letters, int depth,
                        Index capacity = kDefaultFockCapacity);
CuntzIsometries cuntz_isometries(const TruncatedFock& space);

// Projection onto the basis vectors of level < depth (diagonal 0/1).
SparseRealMatrix inner_projection(const TruncatedFock& space);

// I (x) 1 + sum_j S_j (x) a_j^* + sum_j S_j^* (x) a_j on the truncation, as a
// dense (dim * p)-square matrix. Block (child(k, j), k) holds a_j^*, block
// (k, child(k, j)) holds a_j.
HermitianMatrix band_operator(const CuntzIsometries& iso,
                              const MatrixTuple& tuple,
                              Index dense_capacity = kDefaultDenseCapacity);

// Same operator, sparse, with `diagonal` in place of the identity blocks.
SparseComplexMatrix band_operator_sparse(const TruncatedFock& space,
                                         const MatrixTuple& tuple,
                                         double diagonal = 1.0);

// Principal submatrix on the basis vectors of level <= smaller_depth.
ComplexMatrix compress(const ComplexMatrix& bigger, const TruncatedFock& space,
                       Index block, int smaller_depth);

// Block LDL^* pivots of (band - shift I), eliminating leaves first. Every node
// of height h (distance to the truncation boundary) has the same pivot
//   P_0 = (1 - shift) I,  P_h = (1 - shift) I - sum_j a_j P_{h-1}^{-1} a_j^*.
// The band minus shift is positive definite iff every pivot is.
struct BandPivots {
  std::vector<HermitianMatrix> pivots;  // heights 0..depth, or up to failure
  bool positive_definite = true;
  int failed_height = -1;
};
BandPivots band_pivots(const MatrixTuple& tuple, int depth, double shift);

// Bracket [lower, upper] of the smallest eigenvalue of the depth-d band
// operator, obtained by bisection on the pivot test. Costs O(depth p^3) per
// step, independent of dim.
struct EigenBracket {
  double lower = 0.0;
  double upper = 0.0;
  double mid() const { return 0.5 * (lower + upper); }
};
EigenBracket band_min_eigenvalue(const MatrixTuple& tuple, int depth);
// As above, checking the tuple against the space (n and capacity).
EigenBracket band_min_eigenvalue(const TruncatedFock& space,
                                 const MatrixTuple& tuple);

}  // namespace cuntzsys

#endif  // CUNTZSYS_FOCK_HPP_
