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

#ifndef CUNTZSYS_SHORTED_HPP_
#define CUNTZSYS_SHORTED_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuntzsys/fock.hpp"
#include "cuntzsys/linalg.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys {

// A Hermitian matrix with its coordinates split into a leading block
// [0, cut) and the complement [cut, dim).
class BlockSplit {
 public:
  BlockSplit(HermitianMatrix a, Index cut);

  const HermitianMatrix& matrix() const { return a_; }
  Index cut() const { return cut_; }
  Index tail() const { return a_.dim() - cut_; }

  ComplexMatrix a11() const { return a_.matrix().topLeftCorner(cut_, cut_); }
  ComplexMatrix a12() const { return a_.matrix().topRightCorner(cut_, tail()); }
  ComplexMatrix a21() const {
    return a_.matrix().bottomLeftCorner(tail(), cut_);
  }
  ComplexMatrix a22() const {
    return a_.matrix().bottomRightCorner(tail(), tail());
  }

 private:
  HermitianMatrix a_;
  Index cut_;
};

struct ShortResult {
  HermitianMatrix shorted;  // on the leading block
  bool used_pinv = false;   // generalized Schur complement (A22 singular)
};

// The shorted operator onto the leading block: A11 - A12 A22^{-1} A21, with
// the pseudo-inverse when A22 is singular. Throws DomainError unless
// A >= -tol, tol defaulting to linalg::default_tolerance(A).
ShortResult short_operator(const BlockSplit& split,
                           double cutoff = linalg::kDefaultPinvCutoff,
                           std::optional<double> tol = std::nullopt);

struct VariationalReport {
  double shorted_value = 0.0;   // <S0(A) x, x>
  double infimum_value = 0.0;   // quadratic form at the closed-form minimizer
  double sampled_min = 0.0;     // best value over random trial y
  double relative_error = 0.0;  // |shorted - infimum| / max(1, |shorted|)
  double undercut = 0.0;        // max(0, infimum - sampled_min)
  ComplexVector minimizer;      // y* = -A22^+ A21 x
  int trials = 0;
};

// Checks <S0(A) x, x> = inf_y <A (x, y), (x, y)> via the closed-form
// minimizer and `trials` random perturbations of it.
VariationalReport variational_check(const BlockSplit& split,
                                    const ComplexVector& x, int trials,
                                    std::uint64_t seed = 0x5eed);

// [[a, a_1, ..., a_n], [a_1^*, b, 0, ...], ..., [a_n^*, 0, ..., b]]
HermitianMatrix arrowhead(const ComplexMatrix& a, const ComplexMatrix& b,
                          const MatrixTuple& arms);

struct AndoCertificate {
  MatrixTuple arms;
  HermitianMatrix a;
  HermitianMatrix b;
  HermitianMatrix arrowhead;
  double margin = 0.0;    // smallest eigenvalue of the arrowhead
  double a_margin = 0.0;  // smallest eigenvalue of a
  double b_margin = 0.0;  // smallest eigenvalue of b
  double epsilon_used = 0.0;
  int depth_used = 0;
  std::string method;

  // a, b >> 0 and the arrowhead is positive up to tol.
  bool valid(double tol) const {
    return a_margin > 0.0 && b_margin > 0.0 && margin >= -tol;
  }
  bool strict(double tol) const { return valid(tol) && margin > tol; }
};

enum class ShortMethod {
  kAuto,         // sparse global solve when the truncation fits, else recursion
  kGlobalSolve,  // one sparse Cholesky solve with the depth-L band's A22
  kNeumann,      // sum_k (1 - A22)^k A21 with sparse products
  kRecursion,    // self-similar one-level peeling, O(L p^3)
};

struct AndoOptions {
  int depth = 6;
  std::optional<double> epsilon;  // default: half the depth-L band margin
  double tol = 1e-8;
  ShortMethod method = ShortMethod::kAuto;
  Index capacity = kDefaultFockCapacity;
};

// Shorts the depth-L band of the epsilon-shrunk tuple onto the vacuum block,
// sets b := B and a := 1 - b, and assembles the arrowhead.
//
// Throws DomainError if the depth-L band has a negative eigenvalue below -tol
// or epsilon is not below the band margin, and ConvergenceError if the
// Neumann condition ||1 - A22|| < 1 fails or A22 cannot be factored.
AndoCertificate ando_complete(const MatrixTuple& tuple,
                              const AndoOptions& options = {});

struct CertificateCheck {
  bool sums_to_identity = false;  // a + b == 1 bit for bit
  bool hermitian = false;
  double a_margin = 0.0;
  double b_margin = 0.0;
  double arrowhead_margin = 0.0;
  // Generalized Schur route: range(a_i^*) in range(b) and
  // a - sum a_i b^+ a_i^* >= 0.
  double range_defect = 0.0;
  double schur_margin = 0.0;
  bool ok = false;
};

// Re-checks a certificate from its data using only dense linear algebra.
CertificateCheck verify_ando_certificate(const MatrixTuple& arms,
                                         const ComplexMatrix& a,
                                         const ComplexMatrix& b, double tol);

struct SelfSimilarityReport {
  std::vector<HermitianMatrix> shorts;    // B_0 .. B_L by global solve
  std::vector<double> drift;              // ||B_l - B_{l-1}||, l >= 1
  std::vector<double> recursion_residual; // ||B_l - (1 - sum a_j B_{l-1}^{-1} a_j^*)||
  bool drift_nonincreasing = true;
};

// Shorts the depth-l band onto the vacuum for l = 0..depth and checks the
// one-level peeling identity between consecutive depths.
SelfSimilarityReport self_similarity_check(
    const MatrixTuple& tuple, int depth,
    Index capacity = kDefaultFockCapacity);

struct CertifyOptions {
  int max_depth = 6;
  double tol = 1e-8;
  int deep_depth = 16384;
  Index capacity = kDefaultFockCapacity;
};

struct CertifyResult {
  std::optional<AndoCertificate> certificate;
  std::optional<AndoCertificate> last_attempt;
  std::vector<std::string> log;
};

// Tries the global construction at max_depth first, then the self-similar
// recursion at deep_depth over a decreasing epsilon ladder. Returns the first
// valid certificate.
CertifyResult certify_dual_row(const MatrixTuple& tuple,
                               const CertifyOptions& options = {});

}  // namespace cuntzsys

#endif  // CUNTZSYS_SHORTED_HPP_
