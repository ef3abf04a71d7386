#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetop/serialize.hpp"

namespace jetop {

struct GridSpec {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  int points_per_axis = 5;
};

/// One self-contained run: a subject (operator or named adversary), the
/// claimed classes, a grid, and check parameters. Reports are deterministic
/// given the scenario and seed.
struct Scenario {
  int dimension = 1;
  int source_class = 2;  // m
  int target_class = 0;  // r
  std::string mode = "exact";  // "exact" | "float"

  std::optional<DiffOperator> subject_operator;
  std::optional<std::string> adversary;  // "shift" | "square" | "abs"
  std::optional<DiffOperator> adversary_base;
  std::optional<VecQ> shift;

  GridSpec grid;
  double tolerance = 1e-9;
  int trials = 20;
  double cap_half_angle = 1.1780972450961724;  // 3*pi/8
  std::uint64_t seed = 0;

  json echo;  // the parsed input, for the report
};

Scenario scenario_from_json(const json& j);

/// The subject as a black box (operator wrapper or built-in adversary).
BlackBox scenario_black_box(const Scenario& scenario);

std::vector<Eigen::VectorXd> make_grid(const GridSpec& grid);
std::vector<VecQ> make_rational_grid(const GridSpec& grid);

/// Runners behind the CLI subcommands. Every report carries
/// "schema_version", an echo of the scenario, and a global "pass".
json run_reconstruct(const Scenario& scenario);
json run_classify(const Scenario& scenario);
json run_locality(const Scenario& scenario);
json run_demo();

/// 0 when the report passes, 1 otherwise.
int exit_code_for(const json& report);

inline constexpr const char* kReportSchemaVersion = "jetop-report/1";

}  // namespace jetop
