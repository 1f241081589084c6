#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "veelocus/numeric.hpp"

namespace veelocus {

enum class Command { check_locus, check_vee, check_wdvv, scan, catalog_list, reproduce };

enum class OutputFormat { text, json };

struct RunSpec {
  Command command = Command::catalog_list;
  std::string target;  // catalog name, file path, "-" for stdin, or scan query
  std::uint64_t seed = 0;
  int samples = 5;
  std::optional<double> tol_override;
  OutputFormat output = OutputFormat::text;
  bool quiet = false;
};

struct RunResult {
  int exit_code = 0;  // 0 verdict true, 1 verdict false, 2 error
  nlohmann::json report;
  std::string text;
};

/// Dispatches to the matching checker/scanner. Library errors are caught and
/// turned into exit code 2 with the message in the report.
RunResult run(const RunSpec& spec);

}  // namespace veelocus
