#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "jetop/scenario.hpp"

namespace {

using jetop::json;

jetop::Scenario load_scenario(const std::string& path, std::optional<std::uint64_t> seed,
                              std::optional<double> tolerance) {
  std::ifstream in(path);
  if (!in) throw jetop::ParameterError("cannot open scenario file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw jetop::ParameterError("scenario parse error in '" + path + "': " + e.what());
  }
  jetop::Scenario scenario = jetop::scenario_from_json(j);
  if (seed) scenario.seed = *seed;
  if (tolerance) scenario.tolerance = *tolerance;
  return scenario;
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw jetop::ParameterError("cannot open output file '" + out_path + "'");
  out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator calculus: reconstruction, locality checks, regime classification"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  bool timings = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario)
      cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
    cmd->add_option("--seed", seed, "override the scenario seed");
    cmd->add_option("--tolerance", tolerance, "override the scenario tolerance");
    cmd->add_flag("--timings", timings, "include wall-clock timings in the report");
  };

  CLI::App* cmd_reconstruct =
      app.add_subcommand("reconstruct", "recover an operator from black-box probes");
  CLI::App* cmd_classify = app.add_subcommand("classify", "decide the (m, r) regime");
  CLI::App* cmd_locality =
      app.add_subcommand("check-locality", "partition, support and flatness checks");
  CLI::App* cmd_demo = app.add_subcommand("demo", "run the built-in showcase scenarios");
  add_common(cmd_reconstruct, true);
  add_common(cmd_classify, true);
  add_common(cmd_locality, true);
  add_common(cmd_demo, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    json report;
    if (cmd_demo->parsed()) {
      report = jetop::run_demo();
    } else {
      const jetop::Scenario scenario = load_scenario(scenario_path, seed, tolerance);
      if (cmd_reconstruct->parsed()) report = jetop::run_reconstruct(scenario);
      if (cmd_classify->parsed()) report = jetop::run_classify(scenario);
      if (cmd_locality->parsed()) report = jetop::run_locality(scenario);
    }
    if (timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timings"] = {
          {"total_ms",
           std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
    emit(report, out_path);
    return jetop::exit_code_for(report);
  } catch (const jetop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
