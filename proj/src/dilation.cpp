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

#include "cuntzsys/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

DilationResult bunce_dilate(const MatrixTuple& tuple, int depth, double tol,
                            Index dense_capacity) {
  if (depth < 1) throw InputError("bunce_dilate: depth must be >= 1");
  const ContractionVerdict row = is_row_contraction(tuple, tol);
  if (row.status != VerdictStatus::kCertifiedYes) {
    throw DomainError("bunce_dilate: not a row contraction (margin " +
                      std::to_string(row.margin) + ")");
  }
  const int n = tuple.size();
  const Index p = tuple.block_size();

  ComplexMatrix a_row(p, n * p);
  for (int i = 0; i < n; ++i) a_row.middleCols(i * p, p) = tuple[i];
  const HermitianMatrix defect(ComplexMatrix::Identity(n * p, n * p) -
                               a_row.adjoint() * a_row);
  const EigenDecomposition eig = linalg::herm_eig(defect);
  std::vector<Index> kept;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues(k) > 1e-12) kept.push_back(k);
  }
  const Index r = static_cast<Index>(kept.size());
  ComplexMatrix x(r, n * p);
  for (Index s = 0; s < r; ++s) {
    x.row(s) = std::sqrt(eig.eigenvalues(kept[s])) *
               eig.eigenvectors.col(kept[s]).adjoint();
  }

  const TruncatedFock tower(n, depth - 1);
  const Index dim = p + tower.dim() * r;
  if (dim > dense_capacity) {
    throw CapacityError("bunce_dilate: dilation size " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(dense_capacity));
  }

  DilationResult out;
  out.depth = depth;
  out.hilbert_dim = p;
  out.defect_rank = r;
  out.inner = Eigen::VectorXd::Ones(dim);
  const Index top = tower.level_begin(depth - 1);
  for (Index k = top; k < tower.dim(); ++k) {
    out.inner.segment(p + k * r, r).setZero();
  }
  for (int i = 0; i < n; ++i) {
    ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
    v.topLeftCorner(p, p) = tuple[i];
    v.block(p, 0, r, p) = x.middleCols(i * p, p);
    for (Index k = 0; k < top; ++k) {
      const Index child = tower.child(k, i + 1);
      for (Index s = 0; s < r; ++s) v(p + child * r + s, p + k * r + s) = 1.0;
    }
    out.v.push_back(std::move(v));
  }
  return out;
}

namespace {

void for_each_word(int letters, int length, std::vector<int>& word,
                   const auto& visit) {
  if (static_cast<int>(word.size()) == length) {
    visit(word);
    return;
  }
  for (int i = 0; i < letters; ++i) {
    word.push_back(i);
    for_each_word(letters, length, word, visit);
    word.pop_back();
  }
}

}  // namespace

DilationReport verify_dilation(const DilationResult& r,
                               const MatrixTuple& tuple, int max_word) {
  const int n = tuple.size();
  const Index p = tuple.block_size();
  if (static_cast<int>(r.v.size()) != n || r.hilbert_dim != p) {
    throw InputError("verify_dilation: dilation does not match the tuple");
  }
  DilationReport rep;
  const ComplexMatrix inner = r.inner.cast<Complex>().asDiagonal();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix g = r.v[i].adjoint() * r.v[j];
      if (i == j) g -= inner;
      rep.isometry_deviation =
          std::max(rep.isometry_deviation, linalg::op_norm(g));
    }
  }
  const int longest = std::min(max_word, r.depth);
  for (int len = 1; len <= longest; ++len) {
    std::vector<int> word;
    for_each_word(n, len, word, [&](const std::vector<int>& w) {
      ComplexMatrix vw = ComplexMatrix::Identity(r.dim(), r.dim());
      ComplexMatrix aw = ComplexMatrix::Identity(p, p);
      for (int letter : w) {
        vw = vw * r.v[letter];
        aw = aw * tuple[letter];
      }
      rep.compression_deviation =
          std::max(rep.compression_deviation,
                   linalg::op_norm(vw.topLeftCorner(p, p) - aw));
      ++rep.words_checked;
    });
  }
  return rep;
}

QuotientAlgebra::QuotientAlgebra(std::vector<Index> block_sizes,
                                 std::vector<int> ideal)
    : sizes_(std::move(block_sizes)), ideal_(std::move(ideal)) {
  if (sizes_.empty()) throw InputError("QuotientAlgebra: no blocks");
  for (Index s : sizes_) {
    if (s < 1) throw InputError("QuotientAlgebra: block sizes must be >= 1");
  }
  std::sort(ideal_.begin(), ideal_.end());
  ideal_.erase(std::unique(ideal_.begin(), ideal_.end()), ideal_.end());
  for (int k : ideal_) {
    if (k < 0 || k >= static_cast<int>(sizes_.size())) {
      throw InputError("QuotientAlgebra: ideal index out of range");
    }
  }
  if (quotient_dim() == 0) {
    throw InputError("QuotientAlgebra: the ideal is the whole algebra");
  }
}

bool QuotientAlgebra::in_ideal(int block) const {
  return std::binary_search(ideal_.begin(), ideal_.end(), block);
}

Index QuotientAlgebra::full_dim() const {
  Index total = 0;
  for (Index s : sizes_) total += s;
  return total;
}

Index QuotientAlgebra::quotient_dim() const {
  Index total = 0;
  for (int k = 0; k < static_cast<int>(sizes_.size()); ++k) {
    if (!in_ideal(k)) total += sizes_[k];
  }
  return total;
}

ComplexMatrix QuotientAlgebra::project(const ComplexMatrix& full) const {
  if (full.rows() != full_dim() || full.cols() != full_dim()) {
    throw InputError("QuotientAlgebra::project: size mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(quotient_dim(), quotient_dim());
  Index src = 0;
  Index dst = 0;
  for (int k = 0; k < static_cast<int>(sizes_.size()); ++k) {
    const Index s = sizes_[k];
    if (!in_ideal(k)) {
      out.block(dst, dst, s, s) = full.block(src, src, s, s);
      dst += s;
    }
    src += s;
  }
  return out;
}

ComplexMatrix QuotientAlgebra::lift(const ComplexMatrix& quotient) const {
  if (quotient.rows() != quotient_dim() || quotient.cols() != quotient_dim()) {
    throw InputError("QuotientAlgebra::lift: size mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(full_dim(), full_dim());
  Index src = 0;
  Index dst = 0;
  for (int k = 0; k < static_cast<int>(sizes_.size()); ++k) {
    const Index s = sizes_[k];
    if (!in_ideal(k)) {
      out.block(dst, dst, s, s) = quotient.block(src, src, s, s);
      src += s;
    }
    dst += s;
  }
  return out;
}

double QuotientAlgebra::off_block_norm(const ComplexMatrix& quotient) const {
  ComplexMatrix rest = quotient;
  Index at = 0;
  for (int k = 0; k < static_cast<int>(sizes_.size()); ++k) {
    if (in_ideal(k)) continue;
    rest.block(at, at, sizes_[k], sizes_[k]).setZero();
    at += sizes_[k];
  }
  return rest.cwiseAbs().maxCoeff();
}

LiftResult lift_tuple(const QuotientAlgebra& q, const MatrixTuple& tuple,
                      int max_depth) {
  if (tuple.block_size() != q.quotient_dim()) {
    throw InputError("lift_tuple: tuple size does not match the quotient");
  }
  for (const ComplexMatrix& t : tuple) {
    if (q.off_block_norm(t) != 0.0) {
      throw InputError("lift_tuple: tuple is not block diagonal");
    }
  }
  std::vector<ComplexMatrix> lifted;
  bool exact = true;
  for (const ComplexMatrix& t : tuple) {
    lifted.push_back(q.lift(t));
    exact = exact && q.project(lifted.back()) == t;
  }
  LiftResult out{MatrixTuple(std::move(lifted)), exact, {}, {}, 0.0};
  for (int d = 1; d <= max_depth; ++d) {
    const double wq = joint_numerical_radius(tuple, d).lower;
    const double wl = joint_numerical_radius(out.lifted, d).lower;
    out.quotient_radius.push_back(wq);
    out.lifted_radius.push_back(wl);
    out.max_radius_gap = std::max(out.max_radius_gap, std::abs(wq - wl));
  }
  return out;
}

}  // namespace cuntzsys
