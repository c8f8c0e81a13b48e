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

#include "cuntzsys/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cuntzsys/errors.hpp"

namespace cuntzsys {

namespace {

double real_part_top(const ComplexMatrix& t, double theta) {
  const Complex phase = std::polar(1.0, theta);
  const HermitianMatrix re(phase * t);  // hermitizes to Re(e^{i theta} T)
  const Eigen::VectorXd ev = linalg::herm_eigenvalues(re);
  return ev(ev.size() - 1);
}

}  // namespace

RadiusEstimate numerical_radius(const ComplexMatrix& t, int theta_points) {
  if (t.rows() != t.cols() || t.rows() == 0) {
    throw InputError("numerical_radius: T must be square and nonempty");
  }
  if (theta_points < 8) throw InputError("numerical_radius: theta_points < 8");
  linalg::require_finite(t, "numerical_radius");

  const double step = 2.0 * std::numbers::pi / theta_points;
  double grid_max = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int k = 0; k < theta_points; ++k) {
    const double value = real_part_top(t, k * step);
    if (value > grid_max) {
      grid_max = value;
      best_theta = k * step;
    }
  }

  // Golden-section search on [best - step, best + step].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_theta - step;
  double b = best_theta + step;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = real_part_top(t, c);
  double fd = real_part_top(t, d);
  double refined = std::max(fc, fd);
  for (int iter = 0; iter < 60 && b - a > 1e-12; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = real_part_top(t, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = real_part_top(t, d);
    }
    refined = std::max({refined, fc, fd});
  }

  RadiusEstimate r;
  r.lower = std::max(grid_max, refined);
  r.upper = std::max(r.lower, grid_max + linalg::op_norm(t) *
                                             (std::numbers::pi / theta_points));
  r.theta_points = theta_points;
  return r;
}

ComplexMatrix truncated_creation_sum(const MatrixTuple& tuple, int depth,
                                     Index dense_capacity) {
  const TruncatedFock space(tuple.size(), depth);
  const Index p = tuple.block_size();
  const Index size = space.dim() * p;
  if (size > dense_capacity) {
    throw CapacityError("truncated_creation_sum: dense size " +
                        std::to_string(size) + " exceeds cap " +
                        std::to_string(dense_capacity));
  }
  ComplexMatrix t = ComplexMatrix::Zero(size, size);
  const Index inner = space.level_begin(depth);
  for (Index k = 0; k < inner; ++k) {
    for (int letter = 1; letter <= tuple.size(); ++letter) {
      t.block(space.child(k, letter) * p, k * p, p, p) =
          tuple[letter - 1].adjoint();
    }
  }
  return t;
}

RadiusEstimate joint_numerical_radius(const MatrixTuple& tuple, int depth,
                                      int theta_points, RadiusMethod method,
                                      Index capacity) {
  const TruncatedFock space(tuple.size(), depth, capacity);
  if (method == RadiusMethod::kDenseGrid) {
    RadiusEstimate r =
        numerical_radius(truncated_creation_sum(tuple, depth), theta_points);
    r.depth = depth;
    return r;
  }
  const EigenBracket bracket = band_min_eigenvalue(space, tuple);
  RadiusEstimate r;
  r.lower = std::max(0.0, 0.5 * (1.0 - bracket.upper));
  r.upper = std::max(r.lower, 0.5 * (1.0 - bracket.lower));
  r.depth = depth;
  r.theta_points = theta_points;
  return r;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kCertifiedYes:
      return "certified_yes";
    case VerdictStatus::kCertifiedNo:
      return "certified_no";
    case VerdictStatus::kUndecided:
      return "undecided";
  }
  return "undecided";
}

ContractionVerdict is_row_contraction(const MatrixTuple& tuple, double tol) {
  ContractionVerdict v;
  v.margin = 1.0 - linalg::op_norm(tuple.row_gram());
  v.status = v.margin >= -tol ? VerdictStatus::kCertifiedYes
                              : VerdictStatus::kCertifiedNo;
  return v;
}

ContractionVerdict is_dual_row_contraction(const MatrixTuple& tuple,
                                           const DualRowOptions& options) {
  if (options.max_depth < 1) {
    throw InputError("is_dual_row_contraction: max_depth must be >= 1");
  }
  ContractionVerdict v;
  for (int d = 1; d <= options.max_depth; ++d) {
    const TruncatedFock space(tuple.size(), d, options.capacity);
    const EigenBracket bracket = band_min_eigenvalue(space, tuple);
    v.margin = bracket.mid();
    v.depth = d;
    if (bracket.upper < -options.tol) {
      v.status = VerdictStatus::kCertifiedNo;
      v.witness_eigenvalue = bracket.upper;
      v.log.push_back("band eigenvalue " + std::to_string(bracket.upper) +
                      " at depth " + std::to_string(d));
      return v;
    }
  }
  CertifyOptions co;
  co.max_depth = options.max_depth;
  co.tol = options.tol;
  co.deep_depth = options.deep_depth;
  co.capacity = options.capacity;
  CertifyResult cert = certify_dual_row(tuple, co);
  v.log = std::move(cert.log);
  if (cert.certificate) {
    v.status = VerdictStatus::kCertifiedYes;
    v.certificate = std::move(cert.certificate);
  } else {
    v.status = VerdictStatus::kUndecided;
  }
  return v;
}

ImplicationReport dual_implies_row(const MatrixTuple& tuple,
                                   const DualRowOptions& options) {
  ImplicationReport r;
  r.row = is_row_contraction(tuple, options.tol);
  r.dual = is_dual_row_contraction(tuple, options);
  r.implication_holds = r.dual.status != VerdictStatus::kCertifiedYes ||
                        r.row.status == VerdictStatus::kCertifiedYes;
  return r;
}

std::vector<SweepRow> depth_sweep(const MatrixTuple& tuple, int min_depth,
                                  int max_depth, Index capacity) {
  if (min_depth < 0 || max_depth < min_depth) {
    throw InputError("depth_sweep: need 0 <= min_depth <= max_depth");
  }
  std::vector<SweepRow> rows;
  for (int d = min_depth; d <= max_depth; ++d) {
    const TruncatedFock space(tuple.size(), d, capacity);
    const EigenBracket bracket = band_min_eigenvalue(space, tuple);
    rows.push_back({d, std::max(0.0, 0.5 * (1.0 - bracket.upper)),
                    bracket.mid()});
  }
  return rows;
}

}  // namespace cuntzsys
