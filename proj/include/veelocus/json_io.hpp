#pragma once

#include <istream>
#include <string>

#include "json.hpp"
#include "veelocus/configuration.hpp"
#include "veelocus/locus.hpp"
#include "veelocus/scan.hpp"
#include "veelocus/vee.hpp"
#include "veelocus/wdvv.hpp"

namespace veelocus {

nlohmann::json config_to_json(const Configuration& config);

/// Parses the configuration schema
///   { "dim": int, "kind": "locus"|"vee",
///     "entries": [ {"vector": [{"re":..,"im":..},..],
///                   "multiplicity": int | "weight": {"re","im"} }, ... ],
///     "label": string }
/// and validates the result. Throws ParseError / InvariantViolation.
Configuration config_from_json(const nlohmann::json& j, const Tolerance& tol = {});

/// "-" reads the schema from stdin, anything else from a file path.
Configuration load_config(const std::string& path_or_dash, const Tolerance& tol = {});
Configuration load_config_stream(std::istream& in, const std::string& origin,
                                 const Tolerance& tol = {});

nlohmann::json locus_report_to_json(const LocusReport& report);
nlohmann::json vee_report_to_json(const VeeReport& report);
nlohmann::json wdvv_report_to_json(const WdvvReport& report);
nlohmann::json scan_result_to_json(const ScanResult& result);

}  // namespace veelocus
