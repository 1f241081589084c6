#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "veelocus/run.hpp"

namespace {

void emit(const veelocus::RunSpec& spec, const veelocus::RunResult& result) {
  if (spec.output == veelocus::OutputFormat::json) {
    std::cout << result.report.dump(2) << "\n";
  } else if (!spec.quiet) {
    if (result.exit_code == 2)
      std::cerr << result.text;
    else
      std::cout << result.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "veelocus - builds the deformed root-system configurations of the "
      "Calogero-Moser locus catalog, decides the locus and vee conditions, and "
      "numerically certifies the generalized WDVV equations"};
  app.require_subcommand(1);

  veelocus::RunSpec spec;
  std::string output = "text";
  double tol_value = 0.0;
  bool tol_set = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", spec.seed, "seed for all sampling (default 0)");
    cmd->add_option("--samples", spec.samples,
                    "oracle / WDVV sample points per check (default 5)");
    cmd->add_option("--tol", tol_value, "relative tolerance override")
        ->each([&](const std::string&) { tol_set = true; });
    cmd->add_option("--output", output, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--quiet", spec.quiet, "suppress text output");
  };

  const auto add_target = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("target", spec.target, help)->required();
  };

  CLI::App* check_locus = app.add_subcommand(
      "check-locus", "decide the locus conditions for a configuration");
  add_target(check_locus, "catalog name, JSON file path, or '-' for stdin");
  add_common(check_locus);

  CLI::App* check_vee =
      app.add_subcommand("check-vee", "decide the vee conditions for a configuration");
  add_target(check_vee, "catalog name, JSON file path, or '-' for stdin");
  add_common(check_vee);

  CLI::App* check_wdvv = app.add_subcommand(
      "check-wdvv", "test the generalized WDVV equations at sampled points");
  add_target(check_wdvv, "catalog name, JSON file path, or '-' for stdin");
  add_common(check_wdvv);

  CLI::App* scan = app.add_subcommand(
      "scan", "parameter-space classification scans "
              "(prop1:m=..:l=..:k=.. | theorem1:n=..:max_m=.. | prop2:max_m=..:n=.. | "
              "prop3:samples=..)");
  add_target(scan, "scan query");
  add_common(scan);

  CLI::App* catalog_list =
      app.add_subcommand("catalog-list", "list the catalog name grammar");
  add_common(catalog_list);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "run the full verification suite and print a summary table");
  add_common(reproduce);

  CLI11_PARSE(app, argc, argv);

  if (check_locus->parsed()) spec.command = veelocus::Command::check_locus;
  if (check_vee->parsed()) spec.command = veelocus::Command::check_vee;
  if (check_wdvv->parsed()) spec.command = veelocus::Command::check_wdvv;
  if (scan->parsed()) spec.command = veelocus::Command::scan;
  if (catalog_list->parsed()) spec.command = veelocus::Command::catalog_list;
  if (reproduce->parsed()) spec.command = veelocus::Command::reproduce;

  spec.output = output == "json" ? veelocus::OutputFormat::json
                                 : veelocus::OutputFormat::text;
  if (tol_set) {
    spec.tol_override = tol_value;
  } else if (const char* env = std::getenv("VEELOCUS_TOL")) {
    try {
      spec.tol_override = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: VEELOCUS_TOL is not a number: " << env << "\n";
      return 2;
    }
  }

  const veelocus::RunResult result = veelocus::run(spec);
  emit(spec, result);
  return result.exit_code;
}
