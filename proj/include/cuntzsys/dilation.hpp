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

#ifndef CUNTZSYS_DILATION_HPP_
#define CUNTZSYS_DILATION_HPP_

#include <vector>

#include "cuntzsys/fock.hpp"
#include "cuntzsys/linalg.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys {

// Isometric dilation V_i = [[A_i, 0], [X_i, S_i (x) I_r]] on
// H + (F (x) C^r), F the Fock space of depth - 1 (levels 1..depth of the
// tower) and X = [X_1, ..., X_n] the defect square root of I - A_row^* A_row.
struct DilationResult {
  std::vector<ComplexMatrix> v;
  int depth = 0;
  Index hilbert_dim = 0;  // p
  Index defect_rank = 0;  // r
  // Diagonal of the projection onto H and the sub-top tower levels.
  Eigen::VectorXd inner;

  Index dim() const { return inner.size(); }
};

// Throws DomainError unless the tuple is a row contraction up to tol.
DilationResult bunce_dilate(const MatrixTuple& tuple, int depth,
                            double tol = 1e-8,
                            Index dense_capacity = kDefaultDenseCapacity);

struct DilationReport {
  double isometry_deviation = 0.0;     // max ||V_i^* V_j - delta_ij P||
  double compression_deviation = 0.0;  // max ||P_H V_w|_H - A_w||
  int words_checked = 0;
  bool ok(double iso_tol = 1e-10, double word_tol = 1e-9) const {
    return isometry_deviation <= iso_tol && compression_deviation <= word_tol;
  }
};

// Checks the relations on all words of length 1..min(max_word, depth).
DilationReport verify_dilation(const DilationResult& r,
                               const MatrixTuple& tuple, int max_word);

// A finite direct sum of full matrix blocks M_{p_1} + ... + M_{p_m} with the
// ideal spanned by the blocks listed in `ideal` (0-based).
class QuotientAlgebra {
 public:
  QuotientAlgebra(std::vector<Index> block_sizes, std::vector<int> ideal);

  const std::vector<Index>& block_sizes() const { return sizes_; }
  const std::vector<int>& ideal() const { return ideal_; }
  bool in_ideal(int block) const;
  Index full_dim() const;
  Index quotient_dim() const;

  // The quotient map: keeps the blocks outside the ideal.
  ComplexMatrix project(const ComplexMatrix& full) const;
  // Zero-pads a quotient element into the full algebra.
  ComplexMatrix lift(const ComplexMatrix& quotient) const;
  // Largest entry of x outside the quotient's block diagonal.
  double off_block_norm(const ComplexMatrix& quotient) const;

 private:
  std::vector<Index> sizes_;
  std::vector<int> ideal_;
};

struct LiftResult {
  MatrixTuple lifted;
  bool projection_exact = false;
  std::vector<double> quotient_radius;  // depths 1..max_depth
  std::vector<double> lifted_radius;
  double max_radius_gap = 0.0;
};

// Throws InputError if the tuple does not match the quotient's block
// structure.
LiftResult lift_tuple(const QuotientAlgebra& q, const MatrixTuple& tuple,
                      int max_depth = 5);

}  // namespace cuntzsys

#endif  // CUNTZSYS_DILATION_HPP_
