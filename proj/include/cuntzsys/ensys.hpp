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

#ifndef CUNTZSYS_ENSYS_HPP_
#define CUNTZSYS_ENSYS_HPP_

#include <vector>

#include "cuntzsys/linalg.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys {

// An element of E_n (x) M_p: the (n+1) x (n+1) block arrowhead with corner
// a0, diagonal blocks b, first-row blocks a_i and first-column blocks a_i^*.
// a0 and b are Hermitian.
struct EnElement {
  ComplexMatrix a0;
  ComplexMatrix b;
  MatrixTuple arms;

  EnElement(ComplexMatrix a0, ComplexMatrix b, MatrixTuple arms);

  int n() const { return arms.size(); }
  Index p() const { return a0.rows(); }
  ComplexMatrix to_matrix() const;
};

// Coefficients of phi(e) = unit (x) I + sum_i s_i (x) S_i + sum_i s_star_i (x) S_i^*.
struct SnCoefficients {
  ComplexMatrix unit;
  std::vector<ComplexMatrix> s;
  std::vector<ComplexMatrix> s_star;
};

// phi(E_00) = phi(sum E_ii) = I/2, phi(E_i0) = S_i / 2, phi(E_0i) = S_i^* / 2.
SnCoefficients phi_apply(const EnElement& e);

// e lies in span{E_00 - sum E_ii} (x) M_p.
bool kernel_membership(const EnElement& e, double tol = 1e-12);

// The tuple t_i = c^{-1/2} a_i c^{-1/2}, c = a0 + b, whose band operator is
// phi(e) after the congruence by c^{-1/2} (up to the factor 1/2).
MatrixTuple quotient_tuple(const EnElement& e);

struct EnDecomposition {
  int n = 0;
  Index p = 0;
  double epsilon = 0.0;
  ComplexMatrix d;  // a0 + eps - sum a_i (b + eps)^{-1} a_i^*
  // (n+1)^2 x (n+1)^2 block matrix [P_ij] of 0/1 entries.
  Eigen::MatrixXd p_matrix;
  // (n+1)p x (n+1)p block matrix [Q_ij].
  ComplexMatrix q;
  double reconstruction_error = 0.0;  // relative, Frobenius

  Eigen::MatrixXd p_block(int i, int j) const {
    return p_matrix.block(i * (n + 1), j * (n + 1), n + 1, n + 1);
  }
  ComplexMatrix q_block(int i, int j) const {
    return q.block(i * p, j * p, p, p);
  }
  // E_00 (x) D + sum_ij P_ij (x) Q_ij.
  ComplexMatrix reconstruct() const;
};

// The fixed 0/1 pattern P for a given n.
Eigen::MatrixXd en_pattern(int n);

// Throws DomainError if e + eps is not positive up to tol or b + eps is not
// positive definite.
EnDecomposition en_decompose(const EnElement& e, double epsilon = 0.0,
                             double tol = 1e-10);

struct EnDecompositionCheck {
  double p_margin = 0.0;
  double q_margin = 0.0;
  double d_margin = 0.0;
  double reconstruction_error = 0.0;
  bool ok = false;
};

// Re-checks a decomposition against e + eps using only dense linear algebra.
EnDecompositionCheck verify_en_decomposition(const EnElement& e,
                                             const EnDecomposition& dec,
                                             double tol = 1e-10);

// B0 (x) delta_0 + sum_i B_i (x) delta_i + sum_i B_i^* (x) delta_i^*.
struct DualElement {
  ComplexMatrix b0;
  MatrixTuple b;

  int n() const { return b.size(); }
  Index p() const { return b0.rows(); }
};

inline constexpr double kDualLadder[] = {1e-2, 1e-4, 1e-6};

struct DualVerdict {
  VerdictStatus status = VerdictStatus::kUndecided;
  double margin = 0.0;  // 1 - ||sum C B_i C^2 B_i^* C|| on the last rung
  std::vector<double> rung_margins;  // empty when B0 = I
};

// Positivity in M_p(S_n^d). B0 = I reduces to the row-contraction test; a
// general B0 goes through the epsilon ladder with the congruence
// (B0 + eps)^{-1/2}. Throws InputError if B0 is not Hermitian.
DualVerdict dual_positive(const DualElement& d, double tol = 1e-8);

// I_{n+1} (x) B0 + sum E_0i (x) B_i + sum E_i0 (x) B_i^*.
HermitianMatrix theta_embed(const DualElement& d);

// A unital map on S_n^d given by its values x_i = phi(delta_i) in M_q.
struct DualMap {
  ComplexMatrix unit;
  MatrixTuple images;
};

// Complete positivity of the map: dual-row test of (x_1^*, ..., x_n^*).
// Throws InputError unless unit is the identity.
ContractionVerdict dual_cp_check(const DualMap& m,
                                 const DualRowOptions& options = {});

}  // namespace cuntzsys

#endif  // CUNTZSYS_ENSYS_HPP_
