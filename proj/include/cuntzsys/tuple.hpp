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

#ifndef CUNTZSYS_TUPLE_HPP_
#define CUNTZSYS_TUPLE_HPP_

#include <vector>

#include "cuntzsys/linalg.hpp"

namespace cuntzsys {

// An ordered n-tuple (a_1, ..., a_n) of p x p complex matrices.
class MatrixTuple {
 public:
  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<ComplexMatrix> ops);

  static MatrixTuple zeros(int n, Index p);
  // p = 1 tuple from scalars.
  static MatrixTuple scalars(const std::vector<Complex>& values);

  int size() const { return static_cast<int>(ops_.size()); }
  Index block_size() const { return ops_.empty() ? 0 : ops_.front().rows(); }

  // 0-based access; letter i + 1 in the usual 1-based numbering.
  const ComplexMatrix& operator[](int i) const { return ops_[i]; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

  MatrixTuple scaled(Complex factor) const;
  MatrixTuple adjoint() const;

  // sum_i a_i a_i^*
  ComplexMatrix row_gram() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

}  // namespace cuntzsys

#endif  // CUNTZSYS_TUPLE_HPP_
