#include "jetop/scenario.hpp"

#include <cmath>

namespace jetop {

namespace {

Eigen::VectorXd vector_from_json(const json& j, int dim, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParameterError(std::string("scenario: '") + field + "' must be an array of length " +
                         std::to_string(dim));
  Eigen::VectorXd out(dim);
  for (int i = 0; i < dim; ++i) out[i] = j.at(i).get<double>();
  return out;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario s;
  s.echo = j;
  if (!j.is_object()) throw ParameterError("scenario: expected a JSON object");
  if (!j.contains("dimension")) throw ParameterError("scenario: missing field 'dimension'");
  s.dimension = j.at("dimension").get<int>();
  if (s.dimension < 1) throw ParameterError("scenario: dimension must be >= 1");

  s.source_class = j.value("source_class", 2);
  s.target_class = j.value("target_class", 0);
  if (s.source_class < 0 || s.target_class < 0)
    throw ParameterError("scenario: classes must be >= 0");
  s.mode = j.value("mode", "exact");
  if (s.mode != "exact" && s.mode != "float")
    throw ParameterError("scenario: mode must be 'exact' or 'float'");

  if (!j.contains("subject")) throw ParameterError("scenario: missing field 'subject'");
  const json subject = j.at("subject");
  if (subject.contains("operator")) {
    s.subject_operator = operator_from_json(subject.at("operator"));
    if (s.subject_operator->dim() != s.dimension)
      throw ParameterError("scenario: operator dimension disagrees with 'dimension'");
  } else if (subject.contains("adversary")) {
    s.adversary = subject.at("adversary").get<std::string>();
    if (*s.adversary != "shift" && *s.adversary != "square" && *s.adversary != "abs")
      throw ParameterError("scenario: unknown adversary '" + *s.adversary + "'");
    if (subject.contains("base")) s.adversary_base = operator_from_json(subject.at("base"));
    if (subject.contains("shift")) {
      const json sh = subject.at("shift");
      VecQ shift(s.dimension);
      if (static_cast<int>(sh.size()) != s.dimension)
        throw ParameterError("scenario: shift length disagrees with dimension");
      for (int i = 0; i < s.dimension; ++i) shift[i] = rational_from_json(sh.at(i));
      s.shift = shift;
    }
  } else {
    throw ParameterError("scenario: subject needs 'operator' or 'adversary'");
  }

  if (j.contains("grid")) {
    const json g = j.at("grid");
    s.grid.lo = vector_from_json(g.contains("min") ? g.at("min") : json::array(), s.dimension,
                                 "grid.min");
    s.grid.hi = vector_from_json(g.contains("max") ? g.at("max") : json::array(), s.dimension,
                                 "grid.max");
    s.grid.points_per_axis = g.value("points_per_axis", 5);
    if (s.grid.points_per_axis < 1)
      throw ParameterError("scenario: grid.points_per_axis must be >= 1");
    for (int i = 0; i < s.dimension; ++i)
      if (!(s.grid.lo[i] <= s.grid.hi[i])) throw ParameterError("scenario: empty grid box");
  } else {
    s.grid.lo = Eigen::VectorXd::Constant(s.dimension, -1.0);
    s.grid.hi = Eigen::VectorXd::Constant(s.dimension, 1.0);
  }

  s.tolerance = j.value("tolerance", 1e-9);
  s.trials = j.value("trials", 20);
  s.cap_half_angle = j.value("cap_half_angle", 1.1780972450961724);
  s.seed = j.value("seed", static_cast<std::uint64_t>(0));
  return s;
}

BlackBox scenario_black_box(const Scenario& scenario) {
  if (scenario.subject_operator)
    return black_box(*scenario.subject_operator, scenario.source_class, scenario.target_class);
  if (*scenario.adversary == "shift") {
    VecQ shift = scenario.shift.value_or([&] {
      VecQ s = VecQ::Constant(scenario.dimension, Rational(0));
      s[0] = Rational(1);
      return s;
    }());
    return shift_black_box(scenario.dimension, shift, scenario.adversary_base);
  }
  if (*scenario.adversary == "square") return square_black_box(scenario.dimension);
  return abs_black_box(scenario.dimension);
}

std::vector<Eigen::VectorXd> make_grid(const GridSpec& grid) {
  const int n = static_cast<int>(grid.lo.size());
  const int ppa = grid.points_per_axis;
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(std::pow(ppa, n)));
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(n);
  while (true) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i)
      x[i] = ppa == 1 ? grid.lo[i]
                      : grid.lo[i] + idx[i] * (grid.hi[i] - grid.lo[i]) / (ppa - 1);
    out.push_back(x);
    int i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < ppa) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

std::vector<VecQ> make_rational_grid(const GridSpec& grid) {
  const int n = static_cast<int>(grid.lo.size());
  const int ppa = grid.points_per_axis;
  std::vector<VecQ> out;
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(n);
  while (true) {
    VecQ x(n);
    for (int i = 0; i < n; ++i) {
      const Rational lo = Rational::from_double(grid.lo[i]);
      const Rational hi = Rational::from_double(grid.hi[i]);
      x[i] = ppa == 1 ? lo : lo + Rational(idx[i]) * (hi - lo) / Rational(ppa - 1);
    }
    out.push_back(x);
    int i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < ppa) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

namespace {

json report_header(const Scenario& scenario, const char* command) {
  return {{"schema_version", kReportSchemaVersion},
          {"version", "0.1.0"},
          {"command", command},
          {"mode", scenario.mode},
          {"seed", scenario.seed},
          {"scenario", scenario.echo}};
}

std::vector<Polynomial<Rational>> random_tests(SplitMix64& rng, int dim, int degree, int count) {
  std::vector<Polynomial<Rational>> tests;
  tests.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) tests.push_back(random_polynomial(rng, dim, degree));
  return tests;
}

}  // namespace

json run_reconstruct(const Scenario& scenario) {
  json report = report_header(scenario, "reconstruct");
  const BlackBox u = scenario_black_box(scenario);
  const int m = scenario.source_class;
  SplitMix64 rng(scenario.seed);

  ReconstructionReport rec;
  // degree <= m tests are annihilated by construction; the higher-degree
  // tail separates a true operator (still exact zero) from anything merely
  // agreeing with one on low-degree polynomials, e.g. a shift
  std::vector<Polynomial<Rational>> tests = random_tests(rng, scenario.dimension, m, 50);
  for (int i = 0; i < 10; ++i) tests.push_back(random_polynomial(rng, scenario.dimension, m + 2));

  if (scenario.mode == "exact") {
    if (!u.has_symbolic())
      throw ParameterError("reconstruct: exact mode needs a symbolic-capable subject");
    rec.recovered = extract_coefficients(u, m);
    rec.symbolic = true;
    const Rational residual =
        residual_check_symbolic(u, rec.recovered, tests, make_rational_grid(scenario.grid));
    rec.residual_exact_zero = residual.is_zero();
    rec.max_residual = residual.to_double();
  } else {
    const std::vector<Eigen::VectorXd> grid = make_grid(scenario.grid);
    rec.recovered = extract_coefficients_on_grid(u, m, grid);
    rec.symbolic = false;
    std::vector<SmoothFn<double>> dtests;
    for (const auto& t : tests) dtests.emplace_back(t.cast<double>());
    rec.max_residual = residual_check(u, rec.recovered, dtests, grid);
    rec.residual_exact_zero = false;
  }
  rec.probes_used = u.calls();

  const std::vector<Eigen::VectorXd> check_grid = make_grid(scenario.grid);
  const LinearityReport linearity =
      linearity_spot_check(u, scenario.trials, check_grid, rng, scenario.tolerance);
  const FlatnessTransferReport flatness =
      flatness_transfer_check(u, m, scenario.trials, rng, scenario.tolerance);

  const bool residual_ok = rec.max_residual <= scenario.tolerance;
  report["reconstruction"] = to_json(rec);
  report["checks"] = {{"residual_within_tolerance", residual_ok},
                      {"linearity", to_json(linearity)},
                      {"flatness_transfer", to_json(flatness)}};
  report["pass"] = residual_ok && linearity.pass && flatness.pass;
  return report;
}

json run_classify(const Scenario& scenario) {
  json report = report_header(scenario, "classify");
  if (!scenario.subject_operator)
    throw ParameterError("classify: subject must be an operator (reconstruct adversaries first)");
  const ClassificationVerdict verdict =
      classify(*scenario.subject_operator, scenario.source_class, scenario.target_class);
  report["verdict"] = to_json(verdict);
  report["pass"] = verdict.pass;
  return report;
}

json run_locality(const Scenario& scenario) {
  json report = report_header(scenario, "check-locality");
  const BlackBox u = scenario_black_box(scenario);
  const int n = scenario.dimension;
  SplitMix64 rng(scenario.seed);

  // partition sanity on the sphere
  json partition_report;
  bool partition_ok = true;
  {
    const SpherePartition partition = build_partition(n, scenario.cap_half_angle);
    double worst_sum = 0.0, lo = 1.0, hi = 0.0;
    const int samples = 1000;
    for (int s = 0; s < samples; ++s) {
      Eigen::VectorXd x(n);
      for (int i = 0; i < n; ++i) x[i] = 2.0 * rng.next_double() - 1.0;
      if (x.norm() == 0.0) continue;
      x.normalize();
      const double pn = partition.value(SpherePartition::kNorth, x);
      const double ps = partition.value(SpherePartition::kSouth, x);
      worst_sum = std::max(worst_sum, std::abs(pn + ps - 1.0));
      lo = std::min({lo, pn, ps});
      hi = std::max({hi, pn, ps});
    }
    // exact vanishing at the opposite pole, homogeneity at rational scales
    Eigen::VectorXd south = Eigen::VectorXd::Zero(n);
    south[n - 1] = -1.0;
    const double at_south = partition.value(SpherePartition::kNorth, south);
    const ConeCutoff psi = radial_extension(partition, SpherePartition::kNorth);
    bool homogeneous = true;
    for (int t = 0; t < 25; ++t) {
      VecQ x(n);
      for (int i = 0; i < n; ++i) x[i] = random_nonzero_rational(rng);
      const double base = psi(x);
      for (const Rational& lambda : {Rational(1, 2), Rational(2), Rational(10)}) {
        VecQ scaled = x;
        for (int i = 0; i < n; ++i) scaled[i] = scaled[i] * lambda;
        if (psi(scaled) != base) homogeneous = false;
      }
    }
    partition_ok = worst_sum <= 1e-12 && lo >= 0.0 && hi <= 1.0 && at_south == 0.0 && homogeneous;
    partition_report = {{"sum_deviation", worst_sum},
                        {"min_value", lo},
                        {"max_value", hi},
                        {"north_at_south_pole", at_south},
                        {"homogeneous", homogeneous},
                        {"pass", partition_ok}};
  }

  // support condition on a bump occupying the middle half of the grid box
  const Eigen::VectorXd span = scenario.grid.hi - scenario.grid.lo;
  const Eigen::VectorXd lo = scenario.grid.lo + 0.25 * span;
  const Eigen::VectorXd hi = scenario.grid.hi - 0.25 * span;
  const SupportConditionReport support = support_condition_check(
      u, bump_fn(lo, hi), lo, hi, make_grid(scenario.grid), scenario.tolerance);

  const FlatnessTransferReport flatness =
      flatness_transfer_check(u, scenario.source_class, scenario.trials, rng, scenario.tolerance);

  report["partition"] = partition_report;
  report["support_condition"] = to_json(support);
  report["flatness_transfer"] = to_json(flatness);
  report["pass"] = partition_ok && support.pass && flatness.pass;
  return report;
}

json run_demo() {
  json demos = json::array();

  {  // reconstruct 3 + x d^2 from its own black box
    Scenario s;
    s.dimension = 1;
    s.source_class = 2;
    s.mode = "exact";
    DiffOperator op(1, 2);
    op.set_coefficient(MultiIndex{0}, Polynomial<Rational>::constant(1, Rational(3)));
    op.set_coefficient(MultiIndex{2}, Polynomial<Rational>::variable(1, 0));
    s.subject_operator = op;
    s.grid.lo = Eigen::VectorXd::Constant(1, -1.0);
    s.grid.hi = Eigen::VectorXd::Constant(1, 1.0);
    s.echo = {{"builtin", "selftest 3 + x d^2"}};
    demos.push_back(run_reconstruct(s));
  }
  {  // classify the identity multiplication against a smoother target
    Scenario s;
    s.dimension = 1;
    s.source_class = 2;
    s.target_class = 3;
    s.subject_operator =
        DiffOperator::multiplication(Polynomial<Rational>::constant(1, Rational(1)));
    s.echo = {{"builtin", "classify identity at (m,r)=(2,3)"}};
    demos.push_back(run_classify(s));
  }
  {  // locality checks for the plain derivative
    Scenario s;
    s.dimension = 2;
    s.source_class = 1;
    s.subject_operator = DiffOperator::monomial_derivative_op(2, MultiIndex{1, 0});
    s.grid.lo = Eigen::VectorXd::Constant(2, -2.0);
    s.grid.hi = Eigen::VectorXd::Constant(2, 2.0);
    s.echo = {{"builtin", "locality of d/dx in the plane"}};
    demos.push_back(run_locality(s));
  }

  // the classify demo is a deliberate ForcedZero failure with a witness
  const bool ok = demos.at(0).at("pass").get<bool>() && !demos.at(1).at("pass").get<bool>() &&
                  demos.at(1).at("verdict").contains("violation") &&
                  demos.at(2).at("pass").get<bool>();
  return {{"schema_version", kReportSchemaVersion},
          {"command", "demo"},
          {"demos", demos},
          {"pass", ok}};
}

int exit_code_for(const json& report) {
  return report.contains("pass") && report.at("pass").get<bool>() ? 0 : 1;
}

}  // namespace jetop
