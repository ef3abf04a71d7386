#include "doctest.h"

#include "jetop/scenario.hpp"

using namespace jetop;

namespace {

json selftest_scenario() {
  return json::parse(R"({
    "dimension": 1,
    "source_class": 2,
    "target_class": 0,
    "mode": "exact",
    "subject": {"operator": {"dimension": 1, "order": 2, "coefficients": [
      {"alpha": [0], "kind": "poly", "data": {"terms": [{"alpha": [0], "value": "3"}]}},
      {"alpha": [2], "kind": "poly", "data": {"terms": [{"alpha": [1], "value": "1"}]}}
    ]}},
    "grid": {"min": [-1.0], "max": [1.0], "points_per_axis": 11},
    "tolerance": 1e-9,
    "trials": 10,
    "seed": 0
  })");
}

}  // namespace

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(to_json(Rational(3)) == "3");
  CHECK(to_json(Rational(-1, 2)) == "-1/2");
  CHECK(rational_from_json("7/3") == Rational(7, 3));
  CHECK(rational_from_json(5) == Rational(5));
  CHECK(rational_from_json(0.25) == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(json::object()), ParameterError);
}

TEST_CASE("piecewise serialization round-trips") {
  const auto w = smoothness_witness(2, Rational(1, 2));
  const json j = to_json(w);
  CHECK(j.at("breakpoints") == json::array({"1/2"}));
  CHECK(j.at("pieces").size() == 2);
  CHECK(piecewise_from_json(j) == w);
}

TEST_CASE("operators round-trip through json") {
  DiffOperator op(1, 2);
  op.set_coefficient(MultiIndex{0}, smoothness_witness(1, Rational(0)));
  op.set_coefficient(MultiIndex{2}, Polynomial<Rational>::variable(1, 0));
  const DiffOperator back = operator_from_json(to_json(op));
  CHECK(operator_equal(op, back));
}

TEST_CASE("jets serialize with sparse rational coefficients") {
  const auto p = Polynomial<Rational>::variable(1, 0);
  VecQ a(1);
  a[0] = Rational(0);
  const json j = to_json((p * p).jet_at(a, 3));
  CHECK(j.at("order") == 3);
  CHECK(j.at("coeffs").size() == 1);
  CHECK(j.at("coeffs").at(0).at("alpha") == json::array({2}));
  CHECK(j.at("coeffs").at(0).at("value") == "1");
}

TEST_CASE("scenario validation points at the offending field") {
  CHECK_THROWS_WITH_AS(scenario_from_json(json::object()),
                       "scenario: missing field 'dimension'", ParameterError);
  json bad = selftest_scenario();
  bad.erase("subject");
  CHECK_THROWS_WITH_AS(scenario_from_json(bad), "scenario: missing field 'subject'",
                       ParameterError);
  json wrong_mode = selftest_scenario();
  wrong_mode["mode"] = "approximate";
  CHECK_THROWS_AS(scenario_from_json(wrong_mode), ParameterError);
  json bad_adversary = selftest_scenario();
  bad_adversary["subject"] = {{"adversary", "teleport"}};
  CHECK_THROWS_AS(scenario_from_json(bad_adversary), ParameterError);
}

TEST_CASE("reconstruct runner: self-test passes, adversaries fail") {
  SUBCASE("self-test") {
    const json report = run_reconstruct(scenario_from_json(selftest_scenario()));
    CHECK(report.at("pass") == true);
    CHECK(report.at("reconstruction").at("residual_exact_zero") == true);
    CHECK(exit_code_for(report) == 0);
  }
  SUBCASE("square adversary trips the linearity check") {
    json j = selftest_scenario();
    j["subject"] = {{"adversary", "square"}};
    const json report = run_reconstruct(scenario_from_json(j));
    CHECK(report.at("pass") == false);
    CHECK(report.at("checks").at("linearity").at("pass") == false);
    CHECK(exit_code_for(report) == 1);
  }
  SUBCASE("shift adversary leaves a residual") {
    json j = selftest_scenario();
    j["subject"] = {{"adversary", "shift"}, {"shift", {"1"}}};
    const json report = run_reconstruct(scenario_from_json(j));
    CHECK(report.at("pass") == false);
    CHECK(report.at("reconstruction").at("max_residual").get<double>() > 0.0);
  }
}

TEST_CASE("the zero-operator scenario recovers nothing and passes") {
  json j = selftest_scenario();
  j["subject"] = {{"operator",
                   {{"dimension", 1}, {"order", 0}, {"coefficients", json::array()}}}};
  const json report = run_reconstruct(scenario_from_json(j));
  CHECK(report.at("pass") == true);
  CHECK(report.at("reconstruction").at("operator").at("coefficients").empty());
  CHECK(report.at("reconstruction").at("residual_exact_zero") == true);
}

TEST_CASE("classify runner surfaces the verdict") {
  json j = selftest_scenario();
  j["source_class"] = 3;
  j["target_class"] = 1;
  const json report = run_classify(scenario_from_json(j));
  CHECK(report.at("verdict").at("regime") == "OrderBounded");
  CHECK(report.at("pass") == true);
}

TEST_CASE("exact-mode reports are byte-stable") {
  const Scenario s = scenario_from_json(selftest_scenario());
  CHECK(run_reconstruct(s).dump() == run_reconstruct(s).dump());
  json j = selftest_scenario();
  j["dimension"] = 2;
  j["subject"] = {{"operator",
                   {{"dimension", 2},
                    {"order", 1},
                    {"coefficients",
                     json::array({{{"alpha", {1, 0}},
                                   {"kind", "poly"},
                                   {"data", {{"terms", json::array({{{"alpha", {0, 0}},
                                                                     {"value", "1"}}})}}}}})}}}};
  j["grid"] = {{"min", {-2.0, -2.0}}, {"max", {2.0, 2.0}}, {"points_per_axis", 5}};
  j["tolerance"] = 1e-7;
  const Scenario loc = scenario_from_json(j);
  CHECK(run_locality(loc).dump() == run_locality(loc).dump());
}

TEST_CASE("float-mode reconstruction over a grid") {
  json j = selftest_scenario();
  j["mode"] = "float";
  const json report = run_reconstruct(scenario_from_json(j));
  CHECK(report.at("pass") == true);
  CHECK(report.at("reconstruction").at("mode") == "float");
  CHECK(report.at("reconstruction").at("max_residual").get<double>() <= 1e-9);
}
