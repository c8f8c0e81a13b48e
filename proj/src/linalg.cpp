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

#include "cuntzsys/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("HermitianMatrix: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", expected square");
  }
  linalg::require_finite(m, "HermitianMatrix");
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(Index dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

namespace linalg {

void require_finite(const ComplexMatrix& m, std::string_view what) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError(std::string(what) + ": non-finite entry at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

EigenDecomposition herm_eig(const HermitianMatrix& h) {
  if (h.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("herm_eig: eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd herm_eigenvalues(const HermitianMatrix& h) {
  if (h.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("herm_eigenvalues: eigensolver did not converge");
  }
  return es.eigenvalues();
}

namespace {

double spectral_abs_max(const Eigen::VectorXd& ev) {
  if (ev.size() == 0) return 0.0;
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

double default_tolerance(const HermitianMatrix& h) {
  return 1e-8 * std::max(1.0, spectral_abs_max(herm_eigenvalues(h)));
}

PsdReport psd_margin(const HermitianMatrix& h) {
  const Eigen::VectorXd ev = herm_eigenvalues(h);
  PsdReport r;
  r.dim = h.dim();
  r.min_eigenvalue = ev.size() ? ev(0) : 0.0;
  r.tolerance_used = 1e-8 * std::max(1.0, spectral_abs_max(ev));
  return r;
}

PsdReport psd_margin(const HermitianMatrix& h, double tol) {
  const Eigen::VectorXd ev = herm_eigenvalues(h);
  return {ev.size() ? ev(0) : 0.0, h.dim(), tol};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& y) {
  if (a.rows() != a.cols() || a.rows() != y.rows()) {
    throw InputError("solve: shape mismatch");
  }
  require_finite(a, "solve");
  require_finite(y, "solve");
  if (a.rows() == 0) return ComplexMatrix(0, y.cols());
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const double rcond = lu.rcond();
  double cond = rcond > 0.0 ? 1.0 / rcond
                            : std::numeric_limits<double>::infinity();
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0) {
    cond = std::numeric_limits<double>::infinity();
  }
  if (!(cond < kMaxCondition)) {
    throw SolveError("solve: matrix is singular or ill-conditioned (cond ~ " +
                         std::to_string(cond) + ")",
                     cond);
  }
  ComplexMatrix x = lu.solve(y);
  if (!x.allFinite()) {
    throw SolveError("solve: solution is not finite",
                     std::numeric_limits<double>::infinity());
  }
  return x;
}

ComplexMatrix neumann_solve(const ComplexMatrix& a, const ComplexMatrix& y,
                            int max_terms, double rel_tol) {
  if (a.rows() != a.cols() || a.rows() != y.rows()) {
    throw InputError("neumann_solve: shape mismatch");
  }
  const ComplexMatrix step =
      ComplexMatrix::Identity(a.rows(), a.cols()) - a;
  if (op_norm(step) >= 1.0) {
    throw ConvergenceError("neumann_solve: ||I - A|| >= 1, series diverges");
  }
  ComplexMatrix term = y;
  ComplexMatrix sum = y;
  for (int k = 1; k < max_terms; ++k) {
    term = step * term;
    sum += term;
    if (term.norm() <= rel_tol * sum.norm()) return sum;
  }
  throw ConvergenceError("neumann_solve: no convergence within max_terms");
}

ComplexMatrix pinv(const ComplexMatrix& a, double cutoff) {
  require_finite(a, "pinv");
  if (a.size() == 0) return ComplexMatrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(a,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double threshold = cutoff * (s.size() ? s(0) : 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Index k = 0; k < s.size(); ++k) {
    if (s(k) > threshold && s(k) > 0.0) inv(k) = 1.0 / s(k);
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() *
         svd.matrixU().adjoint();
}

double op_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

ComplexMatrix psd_sqrt(const HermitianMatrix& h, double clip) {
  const EigenDecomposition ed = herm_eig(h);
  Eigen::VectorXd root(ed.eigenvalues.size());
  for (Index k = 0; k < root.size(); ++k) {
    const double lambda = ed.eigenvalues(k);
    if (lambda < -clip) {
      throw DomainError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                        " is below the clipping threshold");
    }
    root(k) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  return ed.eigenvectors * root.cast<Complex>().asDiagonal() *
         ed.eigenvectors.adjoint();
}

ComplexMatrix pd_inv_sqrt(const HermitianMatrix& h) {
  const EigenDecomposition ed = herm_eig(h);
  Eigen::VectorXd root(ed.eigenvalues.size());
  for (Index k = 0; k < root.size(); ++k) {
    if (!(ed.eigenvalues(k) > 0.0)) {
      throw DomainError("pd_inv_sqrt: matrix is not positive definite");
    }
    root(k) = 1.0 / std::sqrt(ed.eigenvalues(k));
  }
  return ed.eigenvectors * root.cast<Complex>().asDiagonal() *
         ed.eigenvectors.adjoint();
}

}  // namespace linalg
}  // namespace cuntzsys
