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

#include "cuntzsys/tuple.hpp"

#include <string>
#include <utility>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InputError("MatrixTuple: need at least one operator");
  const Index p = ops_.front().rows();
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].rows() != p || ops_[i].cols() != p) {
      throw InputError("MatrixTuple: operator " + std::to_string(i + 1) +
                       " is not " + std::to_string(p) + "x" +
                       std::to_string(p));
    }
    linalg::require_finite(ops_[i], "MatrixTuple");
  }
  if (p == 0) throw InputError("MatrixTuple: empty blocks");
}

MatrixTuple MatrixTuple::zeros(int n, Index p) {
  return MatrixTuple(std::vector<ComplexMatrix>(n, ComplexMatrix::Zero(p, p)));
}

MatrixTuple MatrixTuple::scalars(const std::vector<Complex>& values) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(values.size());
  for (const Complex& v : values) ops.push_back(ComplexMatrix::Constant(1, 1, v));
  return MatrixTuple(std::move(ops));
}

MatrixTuple MatrixTuple::scaled(Complex factor) const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ops_.size());
  for (const auto& a : ops_) ops.push_back(factor * a);
  return MatrixTuple(std::move(ops));
}

MatrixTuple MatrixTuple::adjoint() const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ops_.size());
  for (const auto& a : ops_) ops.push_back(a.adjoint());
  return MatrixTuple(std::move(ops));
}

ComplexMatrix MatrixTuple::row_gram() const {
  ComplexMatrix g = ComplexMatrix::Zero(block_size(), block_size());
  for (const auto& a : ops_) g += a * a.adjoint();
  return g;
}

}  // namespace cuntzsys
