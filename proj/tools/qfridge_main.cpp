// qfridge_main.cpp — command-line front end: presets, config runs, and JSON
// summaries for the three-qubit absorption-refrigerator simulator.
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qfridge/presets.hpp"
#include "qfridge/run_config.hpp"
#include "qfridge/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "qfridge — transient dynamics of the three-qubit absorption "
      "refrigerator (reset model)"};
  app.require_subcommand(1);

  std::string preset_name;
  std::string out_dir = ".";
  std::string solver = "auto";
  std::string config_path;

  CLI::App* cmd_preset =
      app.add_subcommand("preset", "Run a named scenario preset");
  cmd_preset->add_option("name", preset_name, "Preset name (see list-presets)")
      ->required();
  cmd_preset->add_option("--out", out_dir, "Output directory (default .)");
  cmd_preset->add_option("--solver", solver, "auto | spectral | integrator")
      ->check(CLI::IsMember({"auto", "spectral", "integrator"}));

  CLI::App* cmd_run = app.add_subcommand("run", "Run a config file");
  cmd_run->add_option("--config", config_path, "Flat key=value config file")
      ->required();

  CLI::App* cmd_list =
      app.add_subcommand("list-presets", "List the available preset names");

  CLI::App* cmd_summary = app.add_subcommand(
      "summary", "Print the JSON summary for a config to standard output");
  cmd_summary->add_option("--config", config_path, "Flat key=value config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (cmd_list->parsed()) {
    for (const std::string& name : qfridge::preset_names())
      std::cout << name << '\n';
    return 0;
  }

  if (cmd_preset->parsed()) {
    qfridge::RunConfig config;
    try {
      config = qfridge::preset(preset_name);
    } catch (const std::invalid_argument& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return 2;
    }
    config.out_dir = out_dir;
    config.solver = solver;
    return qfridge::run(config);
  }

  qfridge::RunConfig config;
  try {
    config = qfridge::load_config_file(config_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  }

  if (cmd_run->parsed()) return qfridge::run(config);

  // summary
  try {
    std::cout << qfridge::summary_json(config);
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
