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

#ifndef CUNTZSYS_LINALG_HPP_
#define CUNTZSYS_LINALG_HPP_

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace cuntzsys {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// A square complex matrix equal to its conjugate transpose. Construction
// replaces the input M by (M + M*) / 2, so the stored entries are exactly
// Hermitian.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix identity(Index dim);
  static HermitianMatrix zero(Index dim);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }

 private:
  ComplexMatrix m_;
};

struct PsdReport {
  double min_eigenvalue = 0.0;
  Index dim = 0;
  double tolerance_used = 0.0;

  // ">= 0" up to the tolerance.
  bool positive() const { return min_eigenvalue >= -tolerance_used; }
  // ">> 0": a margin above the tolerance.
  bool strictly_positive() const { return min_eigenvalue > tolerance_used; }
};

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // unitary, columns match eigenvalues
};

namespace linalg {

inline constexpr double kDefaultPinvCutoff = 1e-10;
inline constexpr double kMaxCondition = 1e12;

// Throws InputError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view what);

EigenDecomposition herm_eig(const HermitianMatrix& h);
Eigen::VectorXd herm_eigenvalues(const HermitianMatrix& h);

// 1e-8 * max(1, ||H||).
double default_tolerance(const HermitianMatrix& h);

PsdReport psd_margin(const HermitianMatrix& h);
PsdReport psd_margin(const HermitianMatrix& h, double tol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Direct LU solve of A X = Y. Throws SolveError when A is singular or its
// estimated condition number exceeds kMaxCondition.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& y);

// X = sum_k (I - A)^k Y. Requires ||I - A|| < 1; kept for cross-validation
// against solve().
ComplexMatrix neumann_solve(const ComplexMatrix& a, const ComplexMatrix& y,
                            int max_terms = 100000, double rel_tol = 1e-15);

// Moore-Penrose pseudo-inverse; singular values below cutoff * sigma_max are
// treated as zero.
ComplexMatrix pinv(const ComplexMatrix& a,
                   double cutoff = kDefaultPinvCutoff);

// Largest singular value.
double op_norm(const ComplexMatrix& a);

// Square root and inverse square root of a positive semidefinite matrix.
// Eigenvalues in [-clip, 0) are treated as zero; anything below -clip is a
// DomainError.
ComplexMatrix psd_sqrt(const HermitianMatrix& h, double clip = 1e-12);
ComplexMatrix pd_inv_sqrt(const HermitianMatrix& h);

}  // namespace linalg
}  // namespace cuntzsys

#endif  // CUNTZSYS_LINALG_HPP_
