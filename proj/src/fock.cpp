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

#include "cuntzsys/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

namespace {

// Number of flat indices with level < `level`, or -1 once it passes `cap`.
Index count_below(int letters, int level, Index cap) {
  if (letters == 1) return level;
  Index total = 0;
  Index width = 1;
  for (int l = 0; l < level; ++l) {
    total += width;
    if (total > cap) return -1;
    if (l + 1 < level) {
      if (width > cap / letters + 1) return -1;
      width *= letters;
    }
  }
  return total;
}

}  // namespace

TruncatedFock::TruncatedFock(int letters, int depth, Index capacity)
    : letters_(letters), depth_(depth), dim_(0) {
  if (letters < 1) throw InputError("TruncatedFock: need n >= 1");
  if (depth < 0) throw InputError("TruncatedFock: need depth >= 0");
  dim_ = count_below(letters, depth + 1, capacity);
  if (dim_ < 0 || dim_ > capacity) {
    throw CapacityError("TruncatedFock: n = " + std::to_string(letters) +
                        ", depth = " + std::to_string(depth) +
                        " exceeds the dimension cap " +
                        std::to_string(capacity));
  }
}

Index TruncatedFock::level_begin(int level) const {
  return count_below(letters_, level, std::numeric_limits<Index>::max() / 4);
}

int TruncatedFock::level(Index k) const {
  if (letters_ == 1) return static_cast<int>(k);
  int l = 0;
  while (k > 0) {
    k = (k - 1) / letters_;
    ++l;
  }
  return l;
}

TruncatedFock make_fock(int letters, int depth, Index capacity) {
  return TruncatedFock(letters, depth, capacity);
}

CuntzIsometries::CuntzIsometries(const TruncatedFock& space) : space_(space) {
  const Index dim = space.dim();
  const Index inner = space.level_begin(space.depth());
  s_.reserve(space.letters());
  for (int letter = 1; letter <= space.letters(); ++letter) {
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(inner);
    for (Index k = 0; k < inner; ++k) {
      entries.emplace_back(space.child(k, letter), k, 1.0);
    }
    SparseRealMatrix s(dim, dim);
    s.setFromTriplets(entries.begin(), entries.end());
    s_.push_back(std::move(s));
  }
}

CuntzIsometries::Triplets CuntzIsometries::triplets(int letter) const {
  Triplets t;
  const SparseRealMatrix& s = isometry(letter);
  for (Index col = 0; col < s.outerSize(); ++col) {
    for (SparseRealMatrix::InnerIterator it(s, col); it; ++it) {
      t.row.push_back(it.row());
      t.col.push_back(it.col());
      t.value.push_back(it.value());
    }
  }
  return t;
}

CuntzIsometries cuntz_isometries(const TruncatedFock& space) {
  return CuntzIsometries(space);
}

SparseRealMatrix inner_projection(const TruncatedFock& space) {
  const Index inner = space.level_begin(space.depth());
  SparseRealMatrix p(space.dim(), space.dim());
  std::vector<Eigen::Triplet<double>> entries;
  for (Index k = 0; k < inner; ++k) entries.emplace_back(k, k, 1.0);
  p.setFromTriplets(entries.begin(), entries.end());
  return p;
}

namespace {

void check_tuple_fits(const TruncatedFock& space, const MatrixTuple& tuple) {
  if (tuple.size() != space.letters()) {
    throw InputError("band operator: tuple has " + std::to_string(tuple.size()) +
                     " operators but the Fock space has n = " +
                     std::to_string(space.letters()));
  }
}

}  // namespace

HermitianMatrix band_operator(const CuntzIsometries& iso,
                              const MatrixTuple& tuple, Index dense_capacity) {
  const TruncatedFock& space = iso.space();
  check_tuple_fits(space, tuple);
  const Index p = tuple.block_size();
  const Index size = space.dim() * p;
  if (size > dense_capacity) {
    throw CapacityError("band_operator: dense size " + std::to_string(size) +
                        " exceeds cap " + std::to_string(dense_capacity));
  }
  ComplexMatrix band = ComplexMatrix::Identity(size, size);
  for (int letter = 1; letter <= space.letters(); ++letter) {
    const ComplexMatrix& a = tuple[letter - 1];
    const SparseRealMatrix& s = iso.isometry(letter);
    for (Index col = 0; col < s.outerSize(); ++col) {
      for (SparseRealMatrix::InnerIterator it(s, col); it; ++it) {
        // S_j (x) a_j^* and its adjoint S_j^* (x) a_j.
        band.block(it.row() * p, it.col() * p, p, p) += it.value() * a.adjoint();
        band.block(it.col() * p, it.row() * p, p, p) += it.value() * a;
      }
    }
  }
  return HermitianMatrix(band);
}

SparseComplexMatrix band_operator_sparse(const TruncatedFock& space,
                                         const MatrixTuple& tuple,
                                         double diagonal) {
  check_tuple_fits(space, tuple);
  const Index p = tuple.block_size();
  const Index size = space.dim() * p;
  const Index inner = space.level_begin(space.depth());
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(size + 2 * inner * space.letters() * p * p);
  for (Index r = 0; r < size; ++r) entries.emplace_back(r, r, diagonal);
  for (Index k = 0; k < inner; ++k) {
    for (int letter = 1; letter <= space.letters(); ++letter) {
      const ComplexMatrix& a = tuple[letter - 1];
      const Index c = space.child(k, letter);
      for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < p; ++j) {
          if (a(i, j) == Complex(0.0)) continue;
          entries.emplace_back(k * p + i, c * p + j, a(i, j));
          entries.emplace_back(c * p + j, k * p + i, std::conj(a(i, j)));
        }
      }
    }
  }
  SparseComplexMatrix band(size, size);
  band.setFromTriplets(entries.begin(), entries.end());
  return band;
}

ComplexMatrix compress(const ComplexMatrix& bigger, const TruncatedFock& space,
                       Index block, int smaller_depth) {
  if (bigger.rows() != bigger.cols() ||
      bigger.rows() != space.dim() * block) {
    throw InputError("compress: matrix does not match the Fock space and block");
  }
  if (smaller_depth < 0 || smaller_depth >= space.depth()) {
    throw InputError("compress: target depth must lie in [0, depth)");
  }
  const Index keep = space.level_begin(smaller_depth + 1) * block;
  return bigger.topLeftCorner(keep, keep);
}

BandPivots band_pivots(const MatrixTuple& tuple, int depth, double shift) {
  const Index p = tuple.block_size();
  const ComplexMatrix diag =
      ComplexMatrix::Identity(p, p) * Complex(1.0 - shift);
  BandPivots out;
  out.pivots.reserve(depth + 1);
  ComplexMatrix pivot = diag;
  bool settled = false;
  for (int h = 0; h <= depth; ++h) {
    if (h > 0 && !settled) {
      Eigen::LLT<ComplexMatrix> llt(out.pivots.back().matrix());
      ComplexMatrix next = diag;
      for (const ComplexMatrix& a : tuple) {
        next -= a * llt.solve(a.adjoint());
      }
      const double change = (next - pivot).cwiseAbs().maxCoeff();
      settled = change <= 4.0 * std::numeric_limits<double>::epsilon() *
                              std::max(1.0, next.cwiseAbs().maxCoeff());
      pivot = std::move(next);
    }
    HermitianMatrix herm(pivot);
    Eigen::LLT<ComplexMatrix> check(herm.matrix());
    out.pivots.push_back(std::move(herm));
    if (check.info() != Eigen::Success) {
      out.positive_definite = false;
      out.failed_height = h;
      return out;
    }
  }
  return out;
}

EigenBracket band_min_eigenvalue(const TruncatedFock& space,
                                 const MatrixTuple& tuple) {
  check_tuple_fits(space, tuple);
  return band_min_eigenvalue(tuple, space.depth());
}

EigenBracket band_min_eigenvalue(const MatrixTuple& tuple, int depth) {
  if (depth < 0) throw InputError("band_min_eigenvalue: negative depth");
  // ||sum S_j (x) a_j^*|| <= sqrt(||sum a_j a_j^*||) bounds the spectrum.
  const double r = std::sqrt(linalg::op_norm(tuple.row_gram()));
  double offset = 1e-12 * std::max(1.0, r);
  double lo = 1.0 - 2.0 * r - offset;
  for (int guard = 0; !band_pivots(tuple, depth, lo).positive_definite;
       ++guard) {
    if (guard > 64) {
      throw ConvergenceError("band_min_eigenvalue: no positive lower bound");
    }
    offset *= 2.0;
    lo = 1.0 - 2.0 * r - offset;
  }
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (band_pivots(tuple, depth, mid).positive_definite) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace cuntzsys
