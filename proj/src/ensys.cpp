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

#include "cuntzsys/ensys.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "cuntzsys/errors.hpp"
#include "cuntzsys/shorted.hpp"

namespace cuntzsys {

namespace {

bool is_identity(const ComplexMatrix& m, double tol) {
  return (m - ComplexMatrix::Identity(m.rows(), m.cols())).norm() <= tol;
}

bool is_hermitian(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm() <= 1e-12 * std::max(1.0, m.norm());
}

}  // namespace

EnElement::EnElement(ComplexMatrix a0_in, ComplexMatrix b_in,
                     MatrixTuple arms_in)
    : a0(std::move(a0_in)), b(std::move(b_in)), arms(std::move(arms_in)) {
  if (a0.rows() != a0.cols() || b.rows() != b.cols() ||
      a0.rows() != b.rows() || a0.rows() == 0) {
    throw InputError("EnElement: a0 and b must be square of equal size");
  }
  if (arms.size() == 0 || arms.block_size() != a0.rows()) {
    throw InputError("EnElement: arms must be a nonempty tuple of size p");
  }
  linalg::require_finite(a0, "EnElement a0");
  linalg::require_finite(b, "EnElement b");
  if (!is_hermitian(a0) || !is_hermitian(b)) {
    throw InputError("EnElement: a0 and b must be Hermitian");
  }
}

ComplexMatrix EnElement::to_matrix() const {
  return arrowhead(a0, b, arms).matrix();
}

SnCoefficients phi_apply(const EnElement& e) {
  SnCoefficients c;
  c.unit = 0.5 * (e.a0 + e.b);
  for (const ComplexMatrix& a : e.arms) {
    c.s.push_back(0.5 * a.adjoint());  // from the E_i0 block a_i^*
    c.s_star.push_back(0.5 * a);       // from the E_0i block a_i
  }
  return c;
}

bool kernel_membership(const EnElement& e, double tol) {
  for (const ComplexMatrix& a : e.arms) {
    if (linalg::op_norm(a) > tol) return false;
  }
  return linalg::op_norm(e.a0 + e.b) <= tol;
}

MatrixTuple quotient_tuple(const EnElement& e) {
  const ComplexMatrix s = linalg::pd_inv_sqrt(HermitianMatrix(e.a0 + e.b));
  std::vector<ComplexMatrix> t;
  for (const ComplexMatrix& a : e.arms) t.push_back(s * a * s);
  return MatrixTuple(std::move(t));
}

Eigen::MatrixXd en_pattern(int n) {
  if (n < 1) throw InputError("en_pattern: n must be >= 1");
  const int m = n + 1;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m * m, m * m);
  auto entry = [&](int i, int j, int k, int l) -> double& {
    return p(i * m + k, j * m + l);
  };
  for (int k = 1; k <= n; ++k) entry(0, 0, k, k) = 1.0;
  for (int i = 1; i <= n; ++i) {
    entry(0, i, i, 0) = 1.0;  // P_0i = E_i0
    entry(i, 0, 0, i) = 1.0;  // P_i0 = E_0i
    entry(i, i, 0, 0) = 1.0;  // P_ii = E_00
  }
  return p;
}

ComplexMatrix EnDecomposition::reconstruct() const {
  const int m = n + 1;
  ComplexMatrix out = ComplexMatrix::Zero(m * p, m * p);
  out.topLeftCorner(p, p) = d;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Eigen::MatrixXd pij = p_block(i, j);
      if (pij.isZero()) continue;
      out += linalg::kron(pij.cast<Complex>(), q_block(i, j));
    }
  }
  return out;
}

EnDecomposition en_decompose(const EnElement& e, double epsilon, double tol) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw InputError("en_decompose: epsilon must be finite and >= 0");
  }
  const int n = e.n();
  const Index p = e.p();
  const ComplexMatrix shifted =
      e.to_matrix() + epsilon * ComplexMatrix::Identity((n + 1) * p, (n + 1) * p);
  const PsdReport input = linalg::psd_margin(HermitianMatrix(shifted), tol);
  if (!input.positive()) {
    throw DomainError("en_decompose: element is not positive after the shift (" +
                      std::to_string(input.min_eigenvalue) + ")");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(p, p);
  const HermitianMatrix bt(e.b + epsilon * id);
  if (linalg::psd_margin(bt, 0.0).min_eigenvalue <= 0.0) {
    throw DomainError("en_decompose: b + epsilon is singular; raise epsilon");
  }

  EnDecomposition dec;
  dec.n = n;
  dec.p = p;
  dec.epsilon = epsilon;
  dec.p_matrix = en_pattern(n);

  // Q = C^* bt^{-1} C with C = [bt, a_1^*, ..., a_n^*].
  ComplexMatrix c(p, (n + 1) * p);
  c.leftCols(p) = bt.matrix();
  for (int i = 0; i < n; ++i) c.middleCols((i + 1) * p, p) = e.arms[i].adjoint();
  const ComplexMatrix binv_c = linalg::solve(bt.matrix(), c);
  dec.q = HermitianMatrix(c.adjoint() * binv_c).matrix();
  dec.q.topLeftCorner(p, p) = bt.matrix();

  ComplexMatrix d = e.a0 + epsilon * id;
  for (int i = 0; i < n; ++i) d -= dec.q_block(i + 1, i + 1);
  dec.d = HermitianMatrix(d).matrix();

  const ComplexMatrix diff = dec.reconstruct() - shifted;
  dec.reconstruction_error = diff.norm() / std::max(1.0, shifted.norm());
  return dec;
}

EnDecompositionCheck verify_en_decomposition(const EnElement& e,
                                             const EnDecomposition& dec,
                                             double tol) {
  EnDecompositionCheck chk;
  const int m = e.n() + 1;
  const Index p = e.p();
  if (dec.n != e.n() || dec.p != p || dec.p_matrix.rows() != m * m ||
      dec.p_matrix.cols() != m * m || dec.q.rows() != m * p ||
      dec.q.cols() != m * p || dec.d.rows() != p || dec.d.cols() != p) {
    throw InputError("verify_en_decomposition: shape mismatch");
  }
  chk.p_margin =
      linalg::psd_margin(HermitianMatrix(dec.p_matrix.cast<Complex>()))
          .min_eigenvalue;
  chk.q_margin = linalg::psd_margin(HermitianMatrix(dec.q)).min_eigenvalue;
  chk.d_margin = linalg::psd_margin(HermitianMatrix(dec.d)).min_eigenvalue;
  const ComplexMatrix shifted =
      e.to_matrix() + dec.epsilon * ComplexMatrix::Identity(m * p, m * p);
  chk.reconstruction_error =
      (dec.reconstruct() - shifted).norm() / std::max(1.0, shifted.norm());
  const double scale = std::max(1.0, shifted.norm());
  chk.ok = chk.p_margin >= -tol && chk.q_margin >= -tol * scale &&
           chk.d_margin >= -tol * scale && chk.reconstruction_error <= tol &&
           dec.p_matrix == en_pattern(e.n());
  return chk;
}

DualVerdict dual_positive(const DualElement& d, double tol) {
  if (d.b0.rows() != d.b0.cols() || d.b0.rows() == 0) {
    throw InputError("dual_positive: B0 must be square");
  }
  if (d.b.size() == 0 || d.b.block_size() != d.b0.rows()) {
    throw InputError("dual_positive: B must be a nonempty tuple of size p");
  }
  linalg::require_finite(d.b0, "dual_positive B0");
  const double herm_tol = 1e-12 * std::max(1.0, d.b0.norm());
  if (!is_hermitian(d.b0)) {
    throw InputError("dual_positive: B0 is not Hermitian");
  }

  DualVerdict v;
  if (is_identity(d.b0, herm_tol)) {
    v.margin = 1.0 - linalg::op_norm(d.b.row_gram());
    v.status = v.margin >= -tol ? VerdictStatus::kCertifiedYes
                                : VerdictStatus::kCertifiedNo;
    return v;
  }

  const Index p = d.p();
  int yes = 0;
  int no = 0;
  for (double eps : kDualLadder) {
    const HermitianMatrix shifted(d.b0 + eps * ComplexMatrix::Identity(p, p));
    double margin = -std::numeric_limits<double>::infinity();
    if (linalg::psd_margin(shifted, 0.0).min_eigenvalue > 0.0) {
      const ComplexMatrix s = linalg::pd_inv_sqrt(shifted);
      std::vector<ComplexMatrix> t;
      for (const ComplexMatrix& bi : d.b) t.push_back(s * bi * s);
      margin = 1.0 - linalg::op_norm(MatrixTuple(std::move(t)).row_gram());
    }
    v.rung_margins.push_back(margin);
    v.margin = margin;
    if (margin >= -tol) {
      ++yes;
    } else {
      ++no;
    }
  }
  const int rungs = static_cast<int>(std::size(kDualLadder));
  if (yes == rungs) {
    v.status = VerdictStatus::kCertifiedYes;
  } else if (no == rungs) {
    v.status = VerdictStatus::kCertifiedNo;
  } else {
    v.status = VerdictStatus::kUndecided;
  }
  return v;
}

HermitianMatrix theta_embed(const DualElement& d) {
  if (d.b.size() == 0 || d.b.block_size() != d.b0.rows()) {
    throw InputError("theta_embed: B must be a nonempty tuple of size p");
  }
  if (!is_hermitian(d.b0)) throw InputError("theta_embed: B0 is not Hermitian");
  return arrowhead(d.b0, d.b0, d.b);
}

ContractionVerdict dual_cp_check(const DualMap& m,
                                 const DualRowOptions& options) {
  if (m.images.size() == 0 || m.unit.rows() != m.images.block_size() ||
      m.unit.cols() != m.images.block_size()) {
    throw InputError("dual_cp_check: unit and images must share size q");
  }
  if (!is_identity(m.unit, 1e-12)) {
    throw InputError("dual_cp_check: the map must be unital");
  }
  return is_dual_row_contraction(m.images.adjoint(), options);
}

}  // namespace cuntzsys
