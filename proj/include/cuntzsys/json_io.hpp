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

#ifndef CUNTZSYS_JSON_IO_HPP_
#define CUNTZSYS_JSON_IO_HPP_

#include <json.hpp>

#include "cuntzsys/dilation.hpp"
#include "cuntzsys/ensys.hpp"
#include "cuntzsys/linalg.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/shorted.hpp"
#include "cuntzsys/tuple.hpp"

namespace cuntzsys::json_io {

using Json = nlohmann::json;

// {"rows": r, "cols": c, "re": [[...], ...], "im": [[...], ...]}; "im" may be
// omitted. A bare number reads as a 1 x 1 matrix and a nested array of numbers
// as a real matrix given by rows.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json tuple_to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const Json& j);

Json certificate_to_json(const AndoCertificate& c);
Json verdict_to_json(const ContractionVerdict& v);

EnElement en_element_from_json(const Json& j);
Json en_element_to_json(const EnElement& e);
// {"D", "P", "Q", "epsilon", "element", "n", "p", "reconstruction_error"}.
Json en_decomposition_to_json(const EnDecomposition& d, const EnElement& e);
EnDecomposition en_decomposition_from_json(const Json& j);

// V_i as sparse triplet lists [[row, col, re, im], ...].
Json dilation_to_json(const DilationResult& r);

}  // namespace cuntzsys::json_io

#endif  // CUNTZSYS_JSON_IO_HPP_
