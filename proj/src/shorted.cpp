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

#include "cuntzsys/shorted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/SparseCholesky>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

BlockSplit::BlockSplit(HermitianMatrix a, Index cut) : a_(std::move(a)), cut_(cut) {
  if (cut_ <= 0 || cut_ >= a_.dim()) {
    throw InputError("BlockSplit: cut must satisfy 0 < cut < dim");
  }
}

ShortResult short_operator(const BlockSplit& split, double cutoff,
                           std::optional<double> tol) {
  const PsdReport psd =
      tol ? linalg::psd_margin(split.matrix(), *tol)
          : linalg::psd_margin(split.matrix());
  if (!psd.positive()) {
    throw DomainError("short_operator: matrix is not positive semidefinite "
                      "(min eigenvalue " +
                      std::to_string(psd.min_eigenvalue) + ")");
  }
  const ComplexMatrix a21 = split.a21();
  ComplexMatrix x;
  bool used_pinv = false;
  try {
    x = linalg::solve(split.a22(), a21);
  } catch (const SolveError&) {
    x = linalg::pinv(split.a22(), cutoff) * a21;
    used_pinv = true;
  }
  return {HermitianMatrix(split.a11() - split.a12() * x), used_pinv};
}

namespace {

double quadratic_form(const HermitianMatrix& a, const ComplexVector& x,
                      const ComplexVector& y) {
  ComplexVector v(x.size() + y.size());
  v << x, y;
  return (v.adjoint() * a.matrix() * v)(0, 0).real();
}

ComplexVector random_vector(std::mt19937_64& rng, Index size) {
  std::normal_distribution<double> normal;
  ComplexVector v(size);
  for (Index i = 0; i < size; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

}  // namespace

VariationalReport variational_check(const BlockSplit& split,
                                    const ComplexVector& x, int trials,
                                    std::uint64_t seed) {
  if (x.size() != split.cut()) {
    throw InputError("variational_check: x must live on the leading block");
  }
  const ShortResult s = short_operator(split);
  VariationalReport r;
  r.trials = trials;
  r.shorted_value = (x.adjoint() * s.shorted.matrix() * x)(0, 0).real();
  r.minimizer = -linalg::pinv(split.a22()) * (split.a21() * x);
  r.infimum_value = quadratic_form(split.matrix(), x, r.minimizer);
  r.relative_error = std::abs(r.shorted_value - r.infimum_value) /
                     std::max(1.0, std::abs(r.shorted_value));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_scale(-6.0, 1.0);
  const double base = 1.0 + r.minimizer.norm();
  r.sampled_min = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    ComplexVector y = random_vector(rng, split.tail());
    if (t % 4 != 0) {
      // Perturbations of the minimizer at scales 1e-6 .. 10.
      y = r.minimizer +
          (std::pow(10.0, log_scale(rng)) * base / std::max(1e-300, y.norm())) *
              y;
    }
    r.sampled_min = std::min(r.sampled_min, quadratic_form(split.matrix(), x, y));
  }
  r.undercut = trials > 0 ? std::max(0.0, r.infimum_value - r.sampled_min) : 0.0;
  return r;
}

HermitianMatrix arrowhead(const ComplexMatrix& a, const ComplexMatrix& b,
                          const MatrixTuple& arms) {
  const Index p = arms.block_size();
  if (a.rows() != p || a.cols() != p || b.rows() != p || b.cols() != p) {
    throw InputError("arrowhead: a and b must match the arm size");
  }
  const int n = arms.size();
  ComplexMatrix m = ComplexMatrix::Zero((n + 1) * p, (n + 1) * p);
  m.topLeftCorner(p, p) = a;
  for (int i = 1; i <= n; ++i) {
    m.block(0, i * p, p, p) = arms[i - 1];
    m.block(i * p, 0, p, p) = arms[i - 1].adjoint();
    m.block(i * p, i * p, p, p) = b;
  }
  return HermitianMatrix(m);
}

namespace {

ComplexMatrix factor_and_solve(const SparseComplexMatrix& a22,
                               const ComplexMatrix& rhs) {
  Eigen::SimplicialLDLT<SparseComplexMatrix, Eigen::Lower,
                        Eigen::AMDOrdering<int>>
      ldlt(a22);
  if (ldlt.info() != Eigen::Success) {
    throw ConvergenceError("ando_complete: sparse factorization of A22 failed");
  }
  const Eigen::VectorXcd d = ldlt.vectorD();
  for (Index i = 0; i < d.size(); ++i) {
    if (!(d(i).real() > 0.0)) {
      throw ConvergenceError(
          "ando_complete: A22 is not positive definite at this truncation");
    }
  }
  return ldlt.solve(rhs);
}

ComplexMatrix neumann_apply(const SparseComplexMatrix& a22,
                            const ComplexMatrix& rhs) {
  ComplexMatrix term = rhs;
  ComplexMatrix sum = rhs;
  for (int k = 1; k < 1000000; ++k) {
    term -= a22 * term;
    sum += term;
    if (term.norm() <= 1e-15 * std::max(1.0, sum.norm())) return sum;
  }
  throw ConvergenceError("ando_complete: Neumann series did not converge");
}

// Short of (band_L - eps) onto the vacuum block, materializing the band.
ComplexMatrix global_vacuum_short(const TruncatedFock& space,
                                  const MatrixTuple& tuple, double eps,
                                  bool neumann) {
  const Index p = tuple.block_size();
  const ComplexMatrix a11 = ComplexMatrix::Identity(p, p) * (1.0 - eps);
  if (space.depth() == 0) return a11;
  const SparseComplexMatrix band = band_operator_sparse(space, tuple, 1.0 - eps);
  const Index m = band.rows() - p;
  const SparseComplexMatrix a22 = band.bottomRightCorner(m, m);
  const ComplexMatrix a21 = ComplexMatrix(band.bottomLeftCorner(m, p));
  const ComplexMatrix x = neumann ? neumann_apply(a22, a21)
                                  : factor_and_solve(a22, a21);
  return a11 - a21.adjoint() * x;
}

AndoCertificate assemble(const MatrixTuple& tuple, const ComplexMatrix& shorted,
                         double eps, int depth, std::string method) {
  AndoCertificate c;
  const Index p = tuple.block_size();
  c.arms = tuple;
  c.b = HermitianMatrix(shorted);
  c.a = HermitianMatrix(ComplexMatrix::Identity(p, p) - c.b.matrix());
  c.arrowhead = arrowhead(c.a, c.b, tuple);
  c.margin = linalg::herm_eigenvalues(c.arrowhead)(0);
  c.a_margin = linalg::herm_eigenvalues(c.a)(0);
  c.b_margin = linalg::herm_eigenvalues(c.b)(0);
  c.epsilon_used = eps;
  c.depth_used = depth;
  c.method = std::move(method);
  return c;
}

}  // namespace

AndoCertificate ando_complete(const MatrixTuple& tuple,
                              const AndoOptions& options) {
  const int depth = options.depth;
  if (depth < 1) throw InputError("ando_complete: depth must be >= 1");

  ShortMethod method = options.method;
  std::optional<TruncatedFock> space;
  if (method != ShortMethod::kRecursion) {
    try {
      space.emplace(tuple.size(), depth, options.capacity);
    } catch (const CapacityError&) {
      if (method != ShortMethod::kAuto) throw;
      method = ShortMethod::kRecursion;
    }
  }
  if (method == ShortMethod::kAuto) method = ShortMethod::kGlobalSolve;

  double eps = 0.0;
  if (options.epsilon) {
    eps = *options.epsilon;
    if (eps < 0.0) throw InputError("ando_complete: epsilon must be >= 0");
  }
  if (!options.epsilon || method != ShortMethod::kRecursion) {
    const EigenBracket margin = band_min_eigenvalue(tuple, depth);
    if (margin.upper < -options.tol) {
      throw DomainError(
          "ando_complete: the depth-" + std::to_string(depth) +
          " band operator has eigenvalue " + std::to_string(margin.upper) +
          " < 0; the tuple is not a dual row contraction");
    }
    if (!options.epsilon) {
      eps = 0.5 * std::max(0.0, margin.lower);
    } else if (eps > 0.0 && eps >= margin.upper) {
      throw DomainError("ando_complete: epsilon " + std::to_string(eps) +
                        " is not below the band margin " +
                        std::to_string(margin.lower));
    }
  }

  if (method == ShortMethod::kRecursion) {
    const BandPivots pv = band_pivots(tuple, depth, eps);
    if (!pv.positive_definite && pv.failed_height < depth) {
      throw ConvergenceError(
          "ando_complete: pivot at height " + std::to_string(pv.failed_height) +
          " is not positive definite; A22 is not invertible at this epsilon");
    }
    return assemble(tuple, pv.pivots.back().matrix(), eps, depth, "recursion");
  }

  // A22 is n copies of the depth-(L-1) band minus eps, whose spectrum is
  // symmetric about 1, so ||1 - A22|| = 1 - lambda_min(band_{L-1}) + eps.
  const double inner_margin = band_min_eigenvalue(tuple, depth - 1).lower;
  const double neumann_norm = 1.0 - inner_margin + eps;
  if (!(neumann_norm < 1.0)) {
    throw ConvergenceError("ando_complete: ||1 - A22|| = " +
                           std::to_string(neumann_norm) +
                           " >= 1 at this truncation");
  }
  const bool neumann = method == ShortMethod::kNeumann;
  return assemble(tuple, global_vacuum_short(*space, tuple, eps, neumann), eps,
                  depth, neumann ? "neumann" : "global-solve");
}

CertificateCheck verify_ando_certificate(const MatrixTuple& arms,
                                         const ComplexMatrix& a,
                                         const ComplexMatrix& b, double tol) {
  const Index p = arms.block_size();
  if (a.rows() != p || a.cols() != p || b.rows() != p || b.cols() != p) {
    throw InputError("verify: a and b must be p x p with p the arm size");
  }
  CertificateCheck c;
  c.sums_to_identity = (a + b) == ComplexMatrix::Identity(p, p);
  c.hermitian = a == a.adjoint() && b == b.adjoint();
  c.a_margin = linalg::psd_margin(HermitianMatrix(a), tol).min_eigenvalue;
  c.b_margin = linalg::psd_margin(HermitianMatrix(b), tol).min_eigenvalue;
  c.arrowhead_margin =
      linalg::psd_margin(arrowhead(a, b, arms), tol).min_eigenvalue;

  const ComplexMatrix b_pinv = linalg::pinv(b);
  const ComplexMatrix range_proj = ComplexMatrix::Identity(p, p) - b * b_pinv;
  ComplexMatrix schur = a;
  for (const ComplexMatrix& arm : arms) {
    c.range_defect =
        std::max(c.range_defect, linalg::op_norm(range_proj * arm.adjoint()));
    schur -= arm * b_pinv * arm.adjoint();
  }
  c.schur_margin = linalg::psd_margin(HermitianMatrix(schur), tol).min_eigenvalue;
  c.ok = c.sums_to_identity && c.hermitian && c.a_margin > 0.0 &&
         c.b_margin > 0.0 && c.arrowhead_margin >= -tol;
  return c;
}

SelfSimilarityReport self_similarity_check(const MatrixTuple& tuple, int depth,
                                           Index capacity) {
  if (depth < 1) throw InputError("self_similarity_check: depth must be >= 1");
  if (band_min_eigenvalue(tuple, depth).upper < 0.0) {
    throw DomainError("self_similarity_check: band is not positive at depth " +
                      std::to_string(depth));
  }
  SelfSimilarityReport r;
  const Index p = tuple.block_size();
  for (int l = 0; l <= depth; ++l) {
    const TruncatedFock space(tuple.size(), l, capacity);
    r.shorts.emplace_back(global_vacuum_short(space, tuple, 0.0, false));
    if (l == 0) continue;
    const ComplexMatrix& prev = r.shorts[l - 1].matrix();
    const ComplexMatrix& cur = r.shorts[l].matrix();
    Eigen::LLT<ComplexMatrix> llt(prev);
    ComplexMatrix peeled = ComplexMatrix::Identity(p, p);
    for (const ComplexMatrix& a : tuple) peeled -= a * llt.solve(a.adjoint());
    r.recursion_residual.push_back(linalg::op_norm(cur - peeled));
    r.drift.push_back(linalg::op_norm(cur - prev));
    if (r.drift.size() >= 2 &&
        r.drift.back() > r.drift[r.drift.size() - 2] * (1.0 + 1e-9) + 1e-15) {
      r.drift_nonincreasing = false;
    }
  }
  return r;
}

CertifyResult certify_dual_row(const MatrixTuple& tuple,
                               const CertifyOptions& options) {
  CertifyResult result;
  auto attempt = [&](const AndoOptions& ao, const std::string& label) {
    try {
      AndoCertificate c = ando_complete(tuple, ao);
      result.log.push_back(label + ": margin " + std::to_string(c.margin) +
                           ", a " + std::to_string(c.a_margin) + ", b " +
                           std::to_string(c.b_margin));
      const bool ok = c.valid(options.tol);
      result.last_attempt = c;
      if (ok) result.certificate = std::move(c);
      return ok;
    } catch (const DomainError& e) {
      result.log.push_back(label + ": " + e.what());
    } catch (const ConvergenceError& e) {
      result.log.push_back(label + ": " + e.what());
    }
    return false;
  };

  AndoOptions global;
  global.depth = options.max_depth;
  global.tol = options.tol;
  global.capacity = options.capacity;
  if (attempt(global, "global depth " + std::to_string(options.max_depth))) {
    return result;
  }

  const double margin =
      std::max(0.0, band_min_eigenvalue(tuple, options.max_depth).lower);
  for (double fraction : {0.5, 0.125, 1.0 / 32.0, 0.0}) {
    AndoOptions deep;
    deep.depth = options.deep_depth;
    deep.tol = options.tol;
    deep.method = ShortMethod::kRecursion;
    deep.epsilon = fraction * margin;
    if (attempt(deep, "recursion depth " + std::to_string(options.deep_depth) +
                          " eps " + std::to_string(*deep.epsilon))) {
      return result;
    }
  }
  return result;
}

}  // namespace cuntzsys
