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

#include "cuntzsys/json_io.hpp"

#include <string>
#include <vector>

#include "cuntzsys/errors.hpp"

namespace cuntzsys::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Eigen::MatrixXd read_rows(const Json& j, Index rows, Index cols,
                          const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw InputError(std::string("matrix ") + what + ": expected " +
                     std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InputError(std::string("matrix ") + what + ": expected " +
                       std::to_string(cols) + " columns");
    }
    for (Index c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        throw InputError(std::string("matrix ") + what + ": non-numeric entry");
      }
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

Json write_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["re"] = write_rows(m.real());
  j["im"] = write_rows(m.imag());
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (j.is_number()) {
    return ComplexMatrix::Constant(1, 1, Complex(j.get<double>(), 0.0));
  }
  if (j.is_array()) {
    const Index rows = static_cast<Index>(j.size());
    const Index cols =
        rows > 0 && j[0].is_array() ? static_cast<Index>(j[0].size()) : 0;
    if (rows == 0 || cols == 0) throw InputError("matrix: empty row array");
    return read_rows(j, rows, cols, "rows").cast<Complex>();
  }
  const Json& rj = field(j, "rows");
  const Json& cj = field(j, "cols");
  if (!rj.is_number_integer() || !cj.is_number_integer() ||
      rj.get<long long>() < 1 || cj.get<long long>() < 1) {
    throw InputError("matrix: rows and cols must be positive integers");
  }
  const Index rows = rj.get<Index>();
  const Index cols = cj.get<Index>();
  ComplexMatrix m(rows, cols);
  m.real() = read_rows(field(j, "re"), rows, cols, "re");
  if (j.contains("im")) {
    m.imag() = read_rows(j.at("im"), rows, cols, "im");
  } else {
    m.imag().setZero();
  }
  return m;
}

Json tuple_to_json(const MatrixTuple& t) {
  Json j = Json::array();
  for (const ComplexMatrix& a : t) j.push_back(matrix_to_json(a));
  return j;
}

MatrixTuple tuple_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("tuple: expected a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> ops;
  for (const Json& m : j) ops.push_back(matrix_from_json(m));
  return MatrixTuple(std::move(ops));
}

Json certificate_to_json(const AndoCertificate& c) {
  Json j;
  j["a"] = matrix_to_json(c.a);
  j["b"] = matrix_to_json(c.b);
  j["arms"] = tuple_to_json(c.arms);
  j["margin"] = c.margin;
  j["a_margin"] = c.a_margin;
  j["b_margin"] = c.b_margin;
  j["epsilon"] = c.epsilon_used;
  j["depth"] = c.depth_used;
  j["method"] = c.method;
  return j;
}

Json verdict_to_json(const ContractionVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["margin"] = v.margin;
  j["depth"] = v.depth;
  if (v.witness_eigenvalue) j["witness_eigenvalue"] = *v.witness_eigenvalue;
  if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
  j["log"] = v.log;
  return j;
}

EnElement en_element_from_json(const Json& j) {
  return EnElement(matrix_from_json(field(j, "a0")),
                   matrix_from_json(field(j, "b")),
                   tuple_from_json(field(j, "arms")));
}

Json en_element_to_json(const EnElement& e) {
  Json j;
  j["a0"] = matrix_to_json(e.a0);
  j["b"] = matrix_to_json(e.b);
  j["arms"] = tuple_to_json(e.arms);
  return j;
}

Json en_decomposition_to_json(const EnDecomposition& d, const EnElement& e) {
  Json j;
  j["epsilon"] = d.epsilon;
  j["n"] = d.n;
  j["p"] = d.p;
  j["D"] = matrix_to_json(d.d);
  j["P"] = write_rows(d.p_matrix);
  j["Q"] = matrix_to_json(d.q);
  j["element"] = en_element_to_json(e);
  j["reconstruction_error"] = d.reconstruction_error;
  return j;
}

EnDecomposition en_decomposition_from_json(const Json& j) {
  EnDecomposition d;
  const Json& nj = field(j, "n");
  const Json& pj = field(j, "p");
  if (!nj.is_number_integer() || !pj.is_number_integer() ||
      nj.get<long long>() < 1 || pj.get<long long>() < 1) {
    throw InputError("decomposition: n and p must be positive integers");
  }
  d.n = nj.get<int>();
  d.p = pj.get<Index>();
  const Json& ej = field(j, "epsilon");
  if (!ej.is_number()) throw InputError("decomposition: epsilon must be a number");
  d.epsilon = ej.get<double>();
  d.d = matrix_from_json(field(j, "D"));
  const Index m = d.n + 1;
  d.p_matrix = read_rows(field(j, "P"), m * m, m * m, "P");
  d.q = matrix_from_json(field(j, "Q"));
  return d;
}

Json dilation_to_json(const DilationResult& r) {
  Json j;
  j["depth"] = r.depth;
  j["hilbert_dim"] = r.hilbert_dim;
  j["defect_rank"] = r.defect_rank;
  j["dim"] = r.dim();
  Json vs = Json::array();
  for (const ComplexMatrix& v : r.v) {
    Json entries = Json::array();
    for (Index c = 0; c < v.cols(); ++c) {
      for (Index row = 0; row < v.rows(); ++row) {
        const Complex z = v(row, c);
        if (z != Complex(0.0, 0.0)) {
          entries.push_back({row, c, z.real(), z.imag()});
        }
      }
    }
    vs.push_back(std::move(entries));
  }
  j["V"] = std::move(vs);
  return j;
}

}  // namespace cuntzsys::json_io
