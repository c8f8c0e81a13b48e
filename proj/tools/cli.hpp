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

#ifndef CUNTZSYS_TOOLS_CLI_HPP_
#define CUNTZSYS_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cuntzsys::cli {

enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUndecided = 2,
  kInputError = 3,
};

struct RunConfig {
  double tol = 1e-8;
  int max_depth = 6;
  int theta_points = 720;
  std::optional<double> epsilon;  // unset: half the band margin
  long long capacity_cap = 20000;
  std::uint64_t seed = 0x5eed;
};

// Overlays the keys present in j; unknown keys are an input error.
void apply_config_json(RunConfig& config, const nlohmann::json& j);
// Overlays CUNTZSYS_TOL, CUNTZSYS_MAX_DEPTH, CUNTZSYS_THETA_POINTS,
// CUNTZSYS_EPSILON, CUNTZSYS_CAPACITY_CAP and CUNTZSYS_SEED.
void apply_environment(RunConfig& config);
void validate(const RunConfig& config);

// args excludes the program name. Reads the input document from `in` unless
// --input is given; writes one JSON report to `out`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out);

}  // namespace cuntzsys::cli

#endif  // CUNTZSYS_TOOLS_CLI_HPP_
