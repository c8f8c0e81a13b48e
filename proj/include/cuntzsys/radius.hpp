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

#ifndef CUNTZSYS_RADIUS_HPP_
#define CUNTZSYS_RADIUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cuntzsys/fock.hpp"
#include "cuntzsys/linalg.hpp"
#include "cuntzsys/shorted.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys {

inline constexpr int kDefaultThetaPoints = 720;

struct RadiusEstimate {
  double lower = 0.0;  // certified lower bound
  double upper = 0.0;  // grid value plus Lipschitz slack (or exact bracket)
  int depth = 0;
  int theta_points = 0;
};

// w(T) = max_theta lambda_max((e^{i theta} T + e^{-i theta} T^*) / 2) on a
// uniform grid of theta_points angles plus a golden-section refinement near
// the best one. The true value lies in [lower, upper] with
// upper = grid max + ||T|| pi / theta_points.
RadiusEstimate numerical_radius(const ComplexMatrix& t,
                                int theta_points = kDefaultThetaPoints);

enum class RadiusMethod {
  // The truncated sum_i S_i (x) a_i^* is graded by Fock level, so its
  // numerical range is a disc and w = (1 - lambda_min(band)) / 2; the band
  // eigenvalue comes from the pivot bisection.
  kStructured,
  // Materialize the truncated operator and run numerical_radius on it.
  kDenseGrid,
};

// Joint numerical radius of the depth-d truncation of sum_i S_i (x) a_i^*.
// A lower bound for the untruncated value, nondecreasing in depth.
RadiusEstimate joint_numerical_radius(const MatrixTuple& tuple, int depth,
                                      int theta_points = kDefaultThetaPoints,
                                      RadiusMethod method = RadiusMethod::kStructured,
                                      Index capacity = kDefaultFockCapacity);

// The truncated operator sum_i S_i (x) a_i^* as a dense matrix.
ComplexMatrix truncated_creation_sum(const MatrixTuple& tuple, int depth,
                                     Index dense_capacity = kDefaultDenseCapacity);

enum class VerdictStatus { kCertifiedYes, kCertifiedNo, kUndecided };

std::string to_string(VerdictStatus status);

struct ContractionVerdict {
  VerdictStatus status = VerdictStatus::kUndecided;
  double margin = 0.0;
  int depth = 0;
  // Negative band eigenvalue (upper bracket) backing a certified_no.
  std::optional<double> witness_eigenvalue;
  // Ando certificate backing a certified_yes of the dual-row test.
  std::optional<AndoCertificate> certificate;
  std::vector<std::string> log;
};

// ||sum a_i a_i^*|| <= 1 + tol; margin = 1 - ||sum a_i a_i^*||.
ContractionVerdict is_row_contraction(const MatrixTuple& tuple,
                                      double tol = 1e-8);

struct DualRowOptions {
  int max_depth = 6;
  double tol = 1e-8;
  int deep_depth = 16384;
  Index capacity = kDefaultFockCapacity;
};

// certified_no: some depth <= max_depth has band eigenvalue < -tol.
// certified_yes: certify_dual_row produced a valid Ando certificate.
// undecided otherwise, reporting the max_depth margin.
ContractionVerdict is_dual_row_contraction(const MatrixTuple& tuple,
                                           const DualRowOptions& options = {});

struct ImplicationReport {
  ContractionVerdict row;
  ContractionVerdict dual;
  bool implication_holds = true;  // dual yes => row yes
};

ImplicationReport dual_implies_row(const MatrixTuple& tuple,
                                   const DualRowOptions& options = {});

struct SweepRow {
  int depth = 0;
  double radius_lower = 0.0;
  double band_min_eig = 0.0;
};

std::vector<SweepRow> depth_sweep(const MatrixTuple& tuple, int min_depth,
                                  int max_depth,
                                  Index capacity = kDefaultFockCapacity);

}  // namespace cuntzsys

#endif  // CUNTZSYS_RADIUS_HPP_
