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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cuntzsys/dilation.hpp"
#include "cuntzsys/ensys.hpp"
#include "cuntzsys/errors.hpp"
#include "cuntzsys/fock.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/shorted.hpp"

namespace py = pybind11;
using namespace cuntzsys;

namespace {

MatrixTuple to_tuple(const std::vector<ComplexMatrix>& ops) {
  return MatrixTuple(ops);
}

py::dict certificate_dict(const AndoCertificate& c) {
  py::dict d;
  d["a"] = c.a.matrix();
  d["b"] = c.b.matrix();
  d["arms"] = c.arms.ops();
  d["margin"] = c.margin;
  d["a_margin"] = c.a_margin;
  d["b_margin"] = c.b_margin;
  d["epsilon"] = c.epsilon_used;
  d["depth"] = c.depth_used;
  d["method"] = c.method;
  return d;
}

py::dict verdict_dict(const ContractionVerdict& v) {
  py::dict d;
  d["status"] = to_string(v.status);
  d["margin"] = v.margin;
  d["depth"] = v.depth;
  d["witness_eigenvalue"] =
      v.witness_eigenvalue ? py::cast(*v.witness_eigenvalue) : py::none();
  d["certificate"] =
      v.certificate ? py::object(certificate_dict(*v.certificate)) : py::none();
  d["log"] = v.log;
  return d;
}

DualRowOptions dual_options(int max_depth, double tol) {
  DualRowOptions o;
  o.max_depth = max_depth;
  o.tol = tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Row and dual row contractions, Ando completions, E_n certificates";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SolveError>(m, "SolveError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

  m.def("numerical_radius",
        [](const ComplexMatrix& t, int theta_points) {
          const RadiusEstimate r = numerical_radius(t, theta_points);
          return py::make_tuple(r.lower, r.upper);
        },
        py::arg("t"), py::arg("theta_points") = kDefaultThetaPoints);

  m.def("joint_numerical_radius",
        [](const std::vector<ComplexMatrix>& ops, int depth, int theta_points,
           const std::string& method) {
          RadiusMethod rm = RadiusMethod::kStructured;
          if (method == "dense") {
            rm = RadiusMethod::kDenseGrid;
          } else if (method != "structured") {
            throw InputError("method must be structured or dense");
          }
          const RadiusEstimate r =
              joint_numerical_radius(to_tuple(ops), depth, theta_points, rm);
          return py::make_tuple(r.lower, r.upper);
        },
        py::arg("tuple"), py::arg("depth"),
        py::arg("theta_points") = kDefaultThetaPoints,
        py::arg("method") = "structured");

  m.def("cuntz_isometries",
        [](int n, int depth) {
          const TruncatedFock space(n, depth);
          const CuntzIsometries iso(space);
          std::vector<Eigen::MatrixXd> out;
          for (int i = 1; i <= n; ++i) out.emplace_back(iso.isometry(i));
          return out;
        },
        py::arg("n"), py::arg("depth"));

  m.def("band_operator",
        [](const std::vector<ComplexMatrix>& ops, int depth) {
          const MatrixTuple t = to_tuple(ops);
          const TruncatedFock space(t.size(), depth);
          return band_operator(CuntzIsometries(space), t).matrix();
        },
        py::arg("tuple"), py::arg("depth"));

  m.def("band_min_eigenvalue",
        [](const std::vector<ComplexMatrix>& ops, int depth) {
          const EigenBracket b = band_min_eigenvalue(to_tuple(ops), depth);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("tuple"), py::arg("depth"));

  m.def("is_row_contraction",
        [](const std::vector<ComplexMatrix>& ops, double tol) {
          return verdict_dict(is_row_contraction(to_tuple(ops), tol));
        },
        py::arg("tuple"), py::arg("tol") = 1e-8);

  m.def("is_dual_row_contraction",
        [](const std::vector<ComplexMatrix>& ops, int max_depth, double tol) {
          return verdict_dict(
              is_dual_row_contraction(to_tuple(ops), dual_options(max_depth, tol)));
        },
        py::arg("tuple"), py::arg("max_depth") = 6, py::arg("tol") = 1e-8);

  m.def("short_operator",
        [](const ComplexMatrix& a, Index cut) {
          return short_operator(BlockSplit(HermitianMatrix(a), cut))
              .shorted.matrix();
        },
        py::arg("a"), py::arg("cut"));

  m.def("ando_complete",
        [](const std::vector<ComplexMatrix>& ops, int depth,
           std::optional<double> epsilon, double tol) {
          AndoOptions o;
          o.depth = depth;
          o.epsilon = epsilon;
          o.tol = tol;
          return certificate_dict(ando_complete(to_tuple(ops), o));
        },
        py::arg("tuple"), py::arg("depth") = 6, py::arg("epsilon") = py::none(),
        py::arg("tol") = 1e-8);

  m.def("verify_ando_certificate",
        [](const std::vector<ComplexMatrix>& arms, const ComplexMatrix& a,
           const ComplexMatrix& b, double tol) {
          const CertificateCheck c =
              verify_ando_certificate(to_tuple(arms), a, b, tol);
          py::dict d;
          d["ok"] = c.ok;
          d["sums_to_identity"] = c.sums_to_identity;
          d["a_margin"] = c.a_margin;
          d["b_margin"] = c.b_margin;
          d["arrowhead_margin"] = c.arrowhead_margin;
          d["schur_margin"] = c.schur_margin;
          return d;
        },
        py::arg("arms"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);

  m.def("phi_apply",
        [](const ComplexMatrix& a0, const ComplexMatrix& b,
           const std::vector<ComplexMatrix>& arms) {
          const SnCoefficients c = phi_apply(EnElement(a0, b, to_tuple(arms)));
          return py::make_tuple(c.unit, c.s, c.s_star);
        },
        py::arg("a0"), py::arg("b"), py::arg("arms"));

  m.def("en_decompose",
        [](const ComplexMatrix& a0, const ComplexMatrix& b,
           const std::vector<ComplexMatrix>& arms, double epsilon, double tol) {
          const EnDecomposition dec =
              en_decompose(EnElement(a0, b, to_tuple(arms)), epsilon, tol);
          py::dict d;
          d["D"] = dec.d;
          d["P"] = dec.p_matrix;
          d["Q"] = dec.q;
          d["epsilon"] = dec.epsilon;
          d["reconstruction_error"] = dec.reconstruction_error;
          return d;
        },
        py::arg("a0"), py::arg("b"), py::arg("arms"), py::arg("epsilon") = 0.0,
        py::arg("tol") = 1e-10);

  m.def("dual_positive",
        [](const ComplexMatrix& b0, const std::vector<ComplexMatrix>& b,
           double tol) {
          const DualVerdict v = dual_positive(DualElement{b0, to_tuple(b)}, tol);
          py::dict d;
          d["status"] = to_string(v.status);
          d["margin"] = v.margin;
          d["rung_margins"] = v.rung_margins;
          return d;
        },
        py::arg("b0"), py::arg("b"), py::arg("tol") = 1e-8);

  m.def("theta_embed",
        [](const ComplexMatrix& b0, const std::vector<ComplexMatrix>& b) {
          return theta_embed(DualElement{b0, to_tuple(b)}).matrix();
        },
        py::arg("b0"), py::arg("b"));

  m.def("bunce_dilate",
        [](const std::vector<ComplexMatrix>& ops, int depth, int max_word) {
          const MatrixTuple t = to_tuple(ops);
          const DilationResult r = bunce_dilate(t, depth);
          const DilationReport rep = verify_dilation(r, t, max_word);
          py::dict d;
          d["V"] = r.v;
          d["defect_rank"] = r.defect_rank;
          d["isometry_deviation"] = rep.isometry_deviation;
          d["compression_deviation"] = rep.compression_deviation;
          return d;
        },
        py::arg("tuple"), py::arg("depth") = 4, py::arg("max_word") = 3);

  m.def("lift_tuple",
        [](const std::vector<Index>& block_sizes, const std::vector<int>& ideal,
           const std::vector<ComplexMatrix>& ops, int max_depth) {
          const LiftResult r =
              lift_tuple(QuotientAlgebra(block_sizes, ideal), to_tuple(ops),
                         max_depth);
          py::dict d;
          d["lifted"] = r.lifted.ops();
          d["projection_exact"] = r.projection_exact;
          d["max_radius_gap"] = r.max_radius_gap;
          return d;
        },
        py::arg("block_sizes"), py::arg("ideal"), py::arg("tuple"),
        py::arg("max_depth") = 5);

  m.def("depth_sweep",
        [](const std::vector<ComplexMatrix>& ops, int min_depth, int max_depth) {
          std::vector<py::tuple> rows;
          for (const SweepRow& r : depth_sweep(to_tuple(ops), min_depth, max_depth)) {
            rows.push_back(py::make_tuple(r.depth, r.radius_lower, r.band_min_eig));
          }
          return rows;
        },
        py::arg("tuple"), py::arg("min_depth"), py::arg("max_depth"));
}
