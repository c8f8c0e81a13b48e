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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cuntzsys/dilation.hpp"
#include "cuntzsys/ensys.hpp"
#include "cuntzsys/errors.hpp"
#include "cuntzsys/json_io.hpp"
#include "cuntzsys/radius.hpp"
#include "cuntzsys/shorted.hpp"

namespace cuntzsys::cli {

using json_io::Json;

namespace {

struct Outcome {
  Json report;
  int code = kYes;
};

int exit_code(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kCertifiedYes:
      return kYes;
    case VerdictStatus::kCertifiedNo:
      return kNo;
    case VerdictStatus::kUndecided:
      return kUndecided;
  }
  return kUndecided;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InputError(what + ": not a number: \"" + text + "\"");
  }
  return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InputError(what + ": not an integer: \"" + text + "\"");
  }
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("input: missing field \"") + key + "\"");
  }
  return j.at(key);
}

DualRowOptions dual_options(const RunConfig& c) {
  DualRowOptions o;
  o.max_depth = c.max_depth;
  o.tol = c.tol;
  o.capacity = c.capacity_cap;
  return o;
}

Outcome check_row(const Json& in, const RunConfig& c) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  const ContractionVerdict v = is_row_contraction(t, c.tol);
  Json r = json_io::verdict_to_json(v);
  r["row_norm"] = linalg::op_norm(t.row_gram());
  return {r, exit_code(v.status)};
}

Outcome check_dual_row(const Json& in, const RunConfig& c) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  const ContractionVerdict v = is_dual_row_contraction(t, dual_options(c));
  return {json_io::verdict_to_json(v), exit_code(v.status)};
}

Json radius_json(const RadiusEstimate& r) {
  Json j;
  j["status"] = "ok";
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["depth"] = r.depth;
  j["theta_points"] = r.theta_points;
  return j;
}

Outcome radius(const Json& in, const RunConfig& c) {
  const ComplexMatrix m = json_io::matrix_from_json(field(in, "matrix"));
  return {radius_json(numerical_radius(m, c.theta_points)), kYes};
}

Outcome joint_radius(const Json& in, const RunConfig& c, int depth,
                     const std::string& method) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  RadiusMethod m = RadiusMethod::kStructured;
  if (method == "dense") {
    m = RadiusMethod::kDenseGrid;
  } else if (method != "structured") {
    throw InputError("joint-radius: method must be structured or dense");
  }
  const int d = depth > 0 ? depth : c.max_depth;
  Json j = radius_json(
      joint_numerical_radius(t, d, c.theta_points, m, c.capacity_cap));
  j["method"] = method;
  return {j, kYes};
}

Json certificate_report(const AndoCertificate& cert, double tol) {
  Json j = json_io::certificate_to_json(cert);
  const CertificateCheck chk =
      verify_ando_certificate(cert.arms, cert.a, cert.b, tol);
  j["verified"] = chk.ok;
  j["status"] = chk.ok ? "certified_yes" : "undecided";
  return j;
}

Outcome ando(const Json& in, const RunConfig& c) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  if (c.epsilon) {
    AndoOptions o;
    o.depth = c.max_depth;
    o.epsilon = c.epsilon;
    o.tol = c.tol;
    o.capacity = c.capacity_cap;
    AndoCertificate cert;
    try {
      cert = ando_complete(t, o);
    } catch (const DomainError& e) {
      return {Json{{"status", "certified_no"}, {"reason", e.what()}}, kNo};
    } catch (const ConvergenceError& e) {
      return {Json{{"status", "undecided"}, {"reason", e.what()}}, kUndecided};
    }
    Json j = certificate_report(cert, c.tol);
    return {j, j["verified"].get<bool>() ? kYes : kUndecided};
  }
  const ContractionVerdict v = is_dual_row_contraction(t, dual_options(c));
  if (v.status == VerdictStatus::kCertifiedYes) {
    Json j = certificate_report(*v.certificate, c.tol);
    j["log"] = v.log;
    return {j, j["verified"].get<bool>() ? kYes : kUndecided};
  }
  Json j = json_io::verdict_to_json(v);
  return {j, exit_code(v.status)};
}

Outcome en_decomp(const Json& in, const RunConfig& c) {
  const EnElement e = json_io::en_element_from_json(in);
  double eps = c.epsilon.value_or(0.0);
  if (in.contains("epsilon")) {
    if (!in.at("epsilon").is_number()) {
      throw InputError("input: epsilon must be a number");
    }
    eps = in.at("epsilon").get<double>();
  }
  try {
    const EnDecomposition dec = en_decompose(e, eps, c.tol);
    Json j = json_io::en_decomposition_to_json(dec, e);
    j["status"] = "certified_yes";
    return {j, kYes};
  } catch (const DomainError& ex) {
    return {Json{{"status", "certified_no"}, {"reason", ex.what()}}, kNo};
  }
}

Outcome dual_pos(const Json& in, const RunConfig& c) {
  DualElement d{json_io::matrix_from_json(field(in, "b0")),
                json_io::tuple_from_json(field(in, "b"))};
  const DualVerdict v = dual_positive(d, c.tol);
  Json j;
  j["status"] = to_string(v.status);
  j["margin"] = v.margin;
  j["rung_margins"] = v.rung_margins;
  j["theta_margin"] =
      linalg::psd_margin(theta_embed(d), c.tol).min_eigenvalue;
  return {j, exit_code(v.status)};
}

Outcome cp_check(const Json& in, const RunConfig& c) {
  DualMap m{json_io::matrix_from_json(field(in, "unit")),
            json_io::tuple_from_json(field(in, "images"))};
  const ContractionVerdict v = dual_cp_check(m, dual_options(c));
  return {json_io::verdict_to_json(v), exit_code(v.status)};
}

Outcome dilate(const Json& in, const RunConfig& c, int depth) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  const int d = depth > 0 ? depth : 4;
  DilationResult r;
  try {
    r = bunce_dilate(t, d, c.tol, c.capacity_cap);
  } catch (const DomainError& e) {
    return {Json{{"status", "certified_no"}, {"reason", e.what()}}, kNo};
  }
  const DilationReport rep = verify_dilation(r, t, std::min(3, d));
  Json j = json_io::dilation_to_json(r);
  j["isometry_deviation"] = rep.isometry_deviation;
  j["compression_deviation"] = rep.compression_deviation;
  j["words_checked"] = rep.words_checked;
  j["status"] = rep.ok() ? "ok" : "undecided";
  return {j, rep.ok() ? kYes : kUndecided};
}

Outcome lift(const Json& in, const RunConfig& c, int depth) {
  (void)c;
  const Json& sizes_j = field(in, "block_sizes");
  const Json& ideal_j = field(in, "ideal");
  if (!sizes_j.is_array() || !ideal_j.is_array()) {
    throw InputError("input: block_sizes and ideal must be arrays");
  }
  std::vector<Index> sizes;
  for (const Json& s : sizes_j) {
    if (!s.is_number_integer()) throw InputError("input: bad block size");
    sizes.push_back(s.get<Index>());
  }
  std::vector<int> ideal;
  for (const Json& k : ideal_j) {
    if (!k.is_number_integer()) throw InputError("input: bad ideal index");
    ideal.push_back(k.get<int>());
  }
  const QuotientAlgebra q(std::move(sizes), std::move(ideal));
  const LiftResult r = lift_tuple(
      q, json_io::tuple_from_json(field(in, "tuple")), depth > 0 ? depth : 5);
  Json j;
  j["lifted"] = json_io::tuple_to_json(r.lifted);
  j["projection_exact"] = r.projection_exact;
  j["quotient_radius"] = r.quotient_radius;
  j["lifted_radius"] = r.lifted_radius;
  j["max_radius_gap"] = r.max_radius_gap;
  const bool ok = r.projection_exact && r.max_radius_gap <= 1e-10;
  j["status"] = ok ? "ok" : "undecided";
  return {j, ok ? kYes : kUndecided};
}

Outcome sweep(const Json& in, const RunConfig& c, int min_depth,
              const std::string& csv_path) {
  const MatrixTuple t = json_io::tuple_from_json(field(in, "tuple"));
  const std::vector<SweepRow> rows =
      depth_sweep(t, min_depth, c.max_depth, c.capacity_cap);
  std::ostringstream csv;
  csv.precision(17);
  csv << "depth,radius_lower,band_min_eig\n";
  Json jr = Json::array();
  for (const SweepRow& row : rows) {
    csv << row.depth << ',' << row.radius_lower << ',' << row.band_min_eig
        << '\n';
    jr.push_back({{"depth", row.depth},
                  {"radius_lower", row.radius_lower},
                  {"band_min_eig", row.band_min_eig}});
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw InputError("cannot write csv file " + csv_path);
    f << csv.str();
  }
  return {Json{{"status", "ok"}, {"rows", jr}}, kYes};
}

Outcome verify(const Json& in, const RunConfig& c) {
  if (in.contains("Q")) {
    const EnElement e = json_io::en_element_from_json(field(in, "element"));
    const EnDecomposition dec = json_io::en_decomposition_from_json(in);
    const EnDecompositionCheck chk =
        verify_en_decomposition(e, dec, std::max(c.tol, 1e-10));
    Json j;
    j["kind"] = "en_decomposition";
    j["p_margin"] = chk.p_margin;
    j["q_margin"] = chk.q_margin;
    j["d_margin"] = chk.d_margin;
    j["reconstruction_error"] = chk.reconstruction_error;
    j["ok"] = chk.ok;
    j["status"] = chk.ok ? "certified_yes" : "certified_no";
    return {j, chk.ok ? kYes : kNo};
  }
  const MatrixTuple arms = json_io::tuple_from_json(field(in, "arms"));
  const ComplexMatrix a = json_io::matrix_from_json(field(in, "a"));
  const ComplexMatrix b = json_io::matrix_from_json(field(in, "b"));
  const CertificateCheck chk = verify_ando_certificate(arms, a, b, c.tol);
  Json j;
  j["kind"] = "ando_certificate";
  j["sums_to_identity"] = chk.sums_to_identity;
  j["hermitian"] = chk.hermitian;
  j["a_margin"] = chk.a_margin;
  j["b_margin"] = chk.b_margin;
  j["arrowhead_margin"] = chk.arrowhead_margin;
  j["range_defect"] = chk.range_defect;
  j["schur_margin"] = chk.schur_margin;
  j["ok"] = chk.ok;
  j["status"] = chk.ok ? "certified_yes" : "certified_no";
  return {j, chk.ok ? kYes : kNo};
}

Json error_report(const std::string& type, const std::string& message) {
  return Json{{"status", "input_error"},
              {"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

void apply_config_json(RunConfig& config, const Json& j) {
  if (!j.is_object()) throw InputError("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tol") {
      config.tol = value.get<double>();
    } else if (key == "max_depth") {
      config.max_depth = value.get<int>();
    } else if (key == "theta_points") {
      config.theta_points = value.get<int>();
    } else if (key == "epsilon") {
      if (value.is_null() || (value.is_string() && value == "auto")) {
        config.epsilon.reset();
      } else {
        config.epsilon = value.get<double>();
      }
    } else if (key == "capacity_cap") {
      config.capacity_cap = value.get<long long>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else {
      throw InputError("config: unknown key \"" + key + "\"");
    }
  }
}

void apply_environment(RunConfig& config) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto v = env("CUNTZSYS_TOL")) config.tol = parse_double(*v, "CUNTZSYS_TOL");
  if (auto v = env("CUNTZSYS_MAX_DEPTH")) {
    config.max_depth =
        static_cast<int>(parse_integer(*v, "CUNTZSYS_MAX_DEPTH"));
  }
  if (auto v = env("CUNTZSYS_THETA_POINTS")) {
    config.theta_points =
        static_cast<int>(parse_integer(*v, "CUNTZSYS_THETA_POINTS"));
  }
  if (auto v = env("CUNTZSYS_EPSILON")) {
    if (*v == "auto") {
      config.epsilon.reset();
    } else {
      config.epsilon = parse_double(*v, "CUNTZSYS_EPSILON");
    }
  }
  if (auto v = env("CUNTZSYS_CAPACITY_CAP")) {
    config.capacity_cap = parse_integer(*v, "CUNTZSYS_CAPACITY_CAP");
  }
  if (auto v = env("CUNTZSYS_SEED")) {
    config.seed =
        static_cast<std::uint64_t>(parse_integer(*v, "CUNTZSYS_SEED"));
  }
}

void validate(const RunConfig& config) {
  if (!(config.tol > 0.0)) throw InputError("config: tol must be positive");
  if (config.max_depth < 1) throw InputError("config: max_depth must be >= 1");
  if (config.theta_points < 8) {
    throw InputError("config: theta_points must be >= 8");
  }
  if (config.epsilon && !(*config.epsilon >= 0.0)) {
    throw InputError("config: epsilon must be >= 0");
  }
  if (config.capacity_cap < 1) {
    throw InputError("config: capacity_cap must be positive");
  }
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out) {
  CLI::App app{"Operator-system toolkit for row and dual row contractions",
               "cuntzsys"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string input_path;
  std::optional<double> tol;
  std::optional<int> max_depth;
  std::optional<int> theta_points;
  std::optional<double> epsilon;
  std::optional<long long> capacity_cap;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "RunConfig JSON file");
  app.add_option("--input", input_path, "Input JSON file (default: stdin)");
  app.add_option("--tol", tol, "Positivity tolerance");
  app.add_option("--max-depth", max_depth, "Largest truncation depth");
  app.add_option("--theta-points", theta_points, "Angular grid size");
  app.add_option("--epsilon", epsilon, "Ando shrink parameter");
  app.add_option("--capacity-cap", capacity_cap, "Largest Fock dimension");
  app.add_option("--seed", seed, "Random seed");

  int depth = 0;
  int min_depth = 1;
  std::string method = "structured";
  std::string csv_path;

  std::map<std::string, std::string> verbs = {
      {"check-row", "Row-contraction test"},
      {"check-dual-row", "Dual row-contraction test"},
      {"radius", "Numerical radius of a matrix"},
      {"joint-radius", "Joint numerical radius of a tuple"},
      {"ando-complete", "Ando completion certificate"},
      {"en-decompose", "P (x) Q certificate of an E_n element"},
      {"dual-positive", "Positivity of a dual-system element"},
      {"cp-check", "Complete positivity of a unital map on the dual system"},
      {"dilate", "Isometric dilation of a row contraction"},
      {"lift", "Lift a tuple from a block quotient"},
      {"sweep", "Depth sweep of radius and band eigenvalue"},
      {"verify", "Re-check an emitted certificate"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "joint-radius" || name == "dilate" || name == "lift") {
      sub->add_option("--depth", depth, "Truncation depth");
    }
    if (name == "joint-radius") {
      sub->add_option("--method", method, "structured or dense");
    }
    if (name == "sweep") {
      sub->add_option("--min-depth", min_depth, "First depth");
      sub->add_option("--csv", csv_path, "Write the sweep as CSV");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    out << error_report("usage", e.what()).dump(2) << '\n';
    return kInputError;
  }

  Outcome outcome;
  try {
    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw InputError("cannot open config " + config_path);
      apply_config_json(config, Json::parse(f));
    }
    apply_environment(config);
    if (tol) config.tol = *tol;
    if (max_depth) config.max_depth = *max_depth;
    if (theta_points) config.theta_points = *theta_points;
    if (epsilon) config.epsilon = *epsilon;
    if (capacity_cap) config.capacity_cap = *capacity_cap;
    if (seed) config.seed = *seed;
    validate(config);

    Json doc;
    if (input_path.empty()) {
      doc = Json::parse(in);
    } else {
      std::ifstream f(input_path);
      if (!f) throw InputError("cannot open input " + input_path);
      doc = Json::parse(f);
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "check-row") {
      outcome = check_row(doc, config);
    } else if (verb == "check-dual-row") {
      outcome = check_dual_row(doc, config);
    } else if (verb == "radius") {
      outcome = radius(doc, config);
    } else if (verb == "joint-radius") {
      outcome = joint_radius(doc, config, depth, method);
    } else if (verb == "ando-complete") {
      outcome = ando(doc, config);
    } else if (verb == "en-decompose") {
      outcome = en_decomp(doc, config);
    } else if (verb == "dual-positive") {
      outcome = dual_pos(doc, config);
    } else if (verb == "cp-check") {
      outcome = cp_check(doc, config);
    } else if (verb == "dilate") {
      outcome = dilate(doc, config, depth);
    } else if (verb == "lift") {
      outcome = lift(doc, config, depth);
    } else if (verb == "sweep") {
      outcome = sweep(doc, config, min_depth, csv_path);
    } else {
      outcome = verify(doc, config);
    }
    outcome.report["verb"] = verb;
  } catch (const Json::exception& e) {
    outcome = {error_report("json", e.what()), kInputError};
  } catch (const InputError& e) {
    outcome = {error_report("input", e.what()), kInputError};
  } catch (const CapacityError& e) {
    outcome = {error_report("capacity", e.what()), kInputError};
  } catch (const DomainError& e) {
    outcome = {Json{{"status", "certified_no"}, {"reason", e.what()}}, kNo};
  } catch (const Error& e) {
    outcome = {Json{{"status", "undecided"}, {"reason", e.what()}},
               kUndecided};
  }
  out << outcome.report.dump(2) << '\n';
  return outcome.code;
}

}  // namespace cuntzsys::cli
