#include "veelocus/json_io.hpp"

#include <fstream>
#include <iostream>

namespace veelocus {

namespace {

nlohmann::json cplx_to_json(const cplx& v) {
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

cplx cplx_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError(what + ": complex values are {\"re\":..,\"im\":..} objects");
  if (!j["re"].is_number() || !j["im"].is_number())
    throw ParseError(what + ": complex components must be numbers");
  return cplx{j["re"].get<double>(), j["im"].get<double>()};
}

}  // namespace

nlohmann::json config_to_json(const Configuration& config) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Entry& e : config.entries) {
    nlohmann::json vector = nlohmann::json::array();
    for (const cplx& c : e.vector) vector.push_back(cplx_to_json(c));
    nlohmann::json entry{{"vector", std::move(vector)}};
    if (config.kind == ConfigKind::locus)
      entry["multiplicity"] = e.multiplicity;
    else
      entry["weight"] = cplx_to_json(e.weight);
    entries.push_back(std::move(entry));
  }
  return nlohmann::json{{"dim", config.dim},
                        {"kind", config.kind == ConfigKind::locus ? "locus" : "vee"},
                        {"entries", std::move(entries)},
                        {"label", config.label}};
}

Configuration config_from_json(const nlohmann::json& j, const Tolerance& tol) {
  if (!j.is_object()) throw ParseError("configuration: top level must be an object");
  for (const char* key : {"dim", "kind", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("configuration: missing field '") + key + "'");
  if (!j["dim"].is_number_unsigned())
    throw ParseError("configuration: 'dim' must be a non-negative integer");
  Configuration config;
  config.dim = j["dim"].get<std::size_t>();
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "locus")
    config.kind = ConfigKind::locus;
  else if (kind == "vee")
    config.kind = ConfigKind::vee;
  else
    throw ParseError("configuration: 'kind' must be \"locus\" or \"vee\"");
  config.label = j.value("label", std::string{"(file)"});
  if (!j["entries"].is_array()) throw ParseError("configuration: 'entries' must be an array");
  std::size_t index = 0;
  for (const nlohmann::json& je : j["entries"]) {
    const std::string where = "entries[" + std::to_string(index) + "]";
    if (!je.is_object() || !je.contains("vector"))
      throw ParseError(where + ": entry needs a 'vector' array");
    Entry entry;
    for (const nlohmann::json& jc : je["vector"])
      entry.vector.push_back(cplx_from_json(jc, where));
    if (config.kind == ConfigKind::locus) {
      if (!je.contains("multiplicity") || !je["multiplicity"].is_number_integer())
        throw ParseError(where + ": locus entries need an integer 'multiplicity'");
      entry.multiplicity = je["multiplicity"].get<int>();
    } else {
      entry.weight = je.contains("weight") ? cplx_from_json(je["weight"], where)
                                           : cplx{1.0, 0.0};
    }
    config.entries.push_back(std::move(entry));
    ++index;
  }
  validate(config, tol);
  return config;
}

Configuration load_config_stream(std::istream& in, const std::string& origin,
                                 const Tolerance& tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return config_from_json(j, tol);
}

Configuration load_config(const std::string& path_or_dash, const Tolerance& tol) {
  if (path_or_dash == "-") return load_config_stream(std::cin, "<stdin>", tol);
  std::ifstream file(path_or_dash);
  if (!file) throw ParseError("cannot open configuration file: " + path_or_dash);
  return load_config_stream(file, path_or_dash, tol);
}

nlohmann::json locus_report_to_json(const LocusReport& report) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const LocusCondition& c : report.per_condition)
    conditions.push_back({{"plane", c.plane},
                          {"pivot", c.pivot},
                          {"s", c.s},
                          {"residual", c.residual},
                          {"scale", c.scale},
                          {"pass", c.pass}});
  nlohmann::json oracle = nlohmann::json::array();
  for (const LocusOracleRecord& r : report.oracle)
    oracle.push_back({{"pivot", r.pivot},
                      {"point", r.point},
                      {"s", r.s},
                      {"residual", r.residual},
                      {"scale", r.scale},
                      {"pass", r.pass}});
  return nlohmann::json{{"overall", report.overall},
                        {"planes", report.plane_count},
                        {"conditions", std::move(conditions)},
                        {"oracle", std::move(oracle)}};
}

nlohmann::json vee_report_to_json(const VeeReport& report) {
  nlohmann::json planes = nlohmann::json::array();
  for (const VeePlaneVerdict& v : report.per_plane) {
    nlohmann::json entry{{"plane", v.plane},
                         {"case", v.kind == VeePlaneCase::two_orthogonal
                                      ? "two-orthogonal"
                                      : "multi-proportional"},
                         {"residual", v.residual},
                         {"pass", v.pass}};
    entry["lambda"] = v.lambda.has_value() ? cplx_to_json(*v.lambda) : nlohmann::json{};
    planes.push_back(std::move(entry));
  }
  return nlohmann::json{{"overall", report.overall},
                        {"dim", report.dim},
                        {"effective_dim", report.effective_dim},
                        {"real_field", report.real_field},
                        {"planes", std::move(planes)}};
}

nlohmann::json wdvv_report_to_json(const WdvvReport& report) {
  return nlohmann::json{{"overall", report.overall},
                        {"dim", report.dim},
                        {"effective_dim", report.effective_dim},
                        {"points", report.points},
                        {"checks", report.checks},
                        {"max_residual", report.max_residual}};
}

nlohmann::json scan_result_to_json(const ScanResult& result) {
  nlohmann::json j{{"query", result.query}, {"ok", result.ok},
                   {"counterexamples", result.counterexample_count}};
  if (!result.solutions.empty()) {
    nlohmann::json solutions = nlohmann::json::array();
    for (const ThreeVectorSolution& s : result.solutions) {
      const char* kind = s.kind == ThreeVectorSolution::Kind::coxeter ? "coxeter"
                         : s.kind == ThreeVectorSolution::Kind::discrete
                             ? "discrete"
                             : "isotropic-conic";
      solutions.push_back({{"kind", kind},
                           {"a2", cplx_to_json(cplx{1.0, 0.0})},
                           {"b2", cplx_to_json(s.b2)},
                           {"c2", cplx_to_json(s.c2)}});
    }
    j["solutions"] = std::move(solutions);
  }
  if (!result.prop2_rows.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ScanResult::Prop2Row& r : result.prop2_rows)
      rows.push_back({{"n", r.n},
                      {"m", r.m},
                      {"vee_pass", r.vee_pass},
                      {"wdvv_pass", r.wdvv_pass},
                      {"wdvv_residual", r.wdvv_residual},
                      {"expected_pass", r.expected_pass}});
    j["rows"] = std::move(rows);
  }
  if (result.expected_pass + result.expected_fail > 0) {
    j["expected_pass"] = result.expected_pass;
    j["observed_pass"] = result.observed_pass;
    j["expected_fail"] = result.expected_fail;
    j["observed_fail"] = result.observed_fail;
  }
  return j;
}

}  // namespace veelocus
