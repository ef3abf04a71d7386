#include "jetop/serialize.hpp"

namespace jetop {

namespace {

json require(const json& j, const char* field) {
  if (!j.contains(field))
    throw ParameterError(std::string("scenario: missing field '") + field + "'");
  return j.at(field);
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return Rational::from_double(j.get<double>());
  throw ParameterError("rational: expected string or number, got " + j.dump());
}

json to_json(const MultiIndex& alpha) {
  json out = json::array();
  for (int i = 0; i < alpha.dim(); ++i) out.push_back(alpha[i]);
  return out;
}

MultiIndex multi_index_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParameterError("multi-index: expected nonempty array");
  Eigen::ArrayXi e(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) e[static_cast<int>(i)] = j.at(i).get<int>();
  return MultiIndex(e);
}

json to_json(const Smoothness& s) {
  if (s.is_unbounded()) return "unbounded";
  return s.value();
}

json to_json(const Polynomial<Rational>& p) {
  json terms = json::array();
  for (int r = 0; r < p.basis().size(); ++r) {
    const Rational c = p.coefficients()[r];
    if (c.is_zero()) continue;
    terms.push_back({{"alpha", to_json(p.basis()[r])}, {"value", c.str()}});
  }
  return {{"dimension", p.dim()}, {"terms", terms}};
}

Polynomial<Rational> polynomial_from_json(const json& j, int dim) {
  const json terms = j.is_object() ? require(j, "terms") : j;
  Polynomial<Rational> p(j.is_object() && j.contains("dimension") ? j.at("dimension").get<int>()
                                                                  : dim);
  for (const auto& term : terms) {
    p.add_to_coeff(multi_index_from_json(require(term, "alpha")),
                   rational_from_json(require(term, "value")));
  }
  return p;
}

json to_json(const Jet<Rational>& jet) {
  json base = json::array();
  for (Eigen::Index i = 0; i < jet.base().size(); ++i) base.push_back(jet.base()[i].str());
  json coeffs = json::array();
  for (int r = 0; r < jet.basis().size(); ++r) {
    const Rational c = jet.coefficients()[r];
    if (c.is_zero()) continue;
    coeffs.push_back({{"alpha", to_json(jet.basis()[r])}, {"value", c.str()}});
  }
  return {{"base", base}, {"order", jet.order()}, {"coeffs", coeffs}};
}

json to_json(const PiecewisePoly& f) {
  json bps = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  json pieces = json::array();
  for (const auto& piece : f.pieces()) {
    json ascending = json::array();
    for (int k = 0; k <= piece.degree_actual(); ++k)
      ascending.push_back(piece.coeff(MultiIndex{k}).str());
    pieces.push_back(ascending);
  }
  return {{"breakpoints", bps}, {"pieces", pieces}};
}

PiecewisePoly piecewise_from_json(const json& j) {
  std::vector<Rational> bps;
  for (const auto& b : require(j, "breakpoints")) bps.push_back(rational_from_json(b));
  std::vector<Polynomial<Rational>> pieces;
  for (const auto& pj : require(j, "pieces")) {
    std::vector<Rational> ascending;
    for (const auto& c : pj) ascending.push_back(rational_from_json(c));
    if (ascending.empty()) ascending.push_back(Rational(0));
    pieces.push_back(Polynomial<Rational>::univariate(ascending));
  }
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

json to_json(const GridSamples& g) {
  json points = json::array();
  for (int i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (int c = 0; c < g.dim(); ++c) row.push_back(g.points()(i, c));
    points.push_back(row);
  }
  json values = json::array();
  for (int i = 0; i < g.size(); ++i) values.push_back(g.values()[i]);
  json out = {{"points", points}, {"values", values}};
  if (g.declared_class()) out["declared_class"] = *g.declared_class();
  return out;
}

GridSamples grid_samples_from_json(const json& j) {
  const json points = require(j, "points");
  const json values = require(j, "values");
  if (points.empty()) throw ParameterError("grid samples: empty point set");
  Eigen::MatrixXd pts(points.size(), points.at(0).size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t c = 0; c < points.at(i).size(); ++c)
      pts(static_cast<int>(i), static_cast<int>(c)) = points.at(i).at(c).get<double>();
  Eigen::VectorXd vals(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) vals[static_cast<int>(i)] = values.at(i).get<double>();
  std::optional<int> declared;
  if (j.contains("declared_class")) declared = j.at("declared_class").get<int>();
  return GridSamples(pts, vals, declared);
}

json to_json(const CoefficientFn& c) {
  switch (c.kind()) {
    case CoefficientFn::Kind::Polynomial: return {{"kind", "poly"}, {"data", to_json(c.poly())}};
    case CoefficientFn::Kind::Piecewise: return {{"kind", "pw"}, {"data", to_json(c.pw())}};
    case CoefficientFn::Kind::Grid: return {{"kind", "grid"}, {"data", to_json(c.grid())}};
  }
  throw ParameterError("coefficient: unreachable");
}

json to_json(const DiffOperator& op) {
  json coeffs = json::array();
  for (const auto& [alpha, coeff] : op.coefficients()) {
    json entry = to_json(coeff);
    entry["alpha"] = to_json(alpha);
    coeffs.push_back(entry);
  }
  return {{"dimension", op.dim()}, {"order", op.nominal_order()}, {"coefficients", coeffs}};
}

DiffOperator operator_from_json(const json& j) {
  const int dim = require(j, "dimension").get<int>();
  int order = j.contains("order") ? j.at("order").get<int>() : 0;
  const json coeffs = require(j, "coefficients");
  for (const auto& entry : coeffs)
    order = std::max(order, degree(multi_index_from_json(require(entry, "alpha"))));
  DiffOperator op(dim, order);
  for (const auto& entry : coeffs) {
    const MultiIndex alpha = multi_index_from_json(require(entry, "alpha"));
    const std::string kind = require(entry, "kind").get<std::string>();
    const json data = require(entry, "data");
    if (kind == "poly") {
      op.set_coefficient(alpha, polynomial_from_json(data, dim));
    } else if (kind == "pw") {
      op.set_coefficient(alpha, piecewise_from_json(data));
    } else if (kind == "grid") {
      op.set_coefficient(alpha, grid_samples_from_json(data));
    } else {
      throw ParameterError("operator: unknown coefficient kind '" + kind + "'");
    }
  }
  return op;
}

json to_json(const ViolationWitness& w) {
  json direction = json::array();
  for (Eigen::Index i = 0; i < w.direction.size(); ++i) direction.push_back(w.direction[i].str());
  json anchor = json::array();
  for (Eigen::Index i = 0; i < w.line_anchor.size(); ++i) anchor.push_back(w.line_anchor[i].str());
  return {{"offending_alpha", to_json(w.offending_alpha)},
          {"direction", direction},
          {"line_anchor", anchor},
          {"breakpoint", w.breakpoint.str()},
          {"off_axis_exponent", to_json(w.off_axis_exponent)},
          {"witness", to_json(w.witness_profile)},
          {"output_on_line", to_json(w.output_on_line)},
          {"output_class", to_json(w.output_class)}};
}

json to_json(const ClassificationVerdict& v) {
  json out = {{"regime", regime_name(v.regime)},
              {"pass", v.pass},
              {"source_class", v.source_class},
              {"target_class", v.target_class},
              {"operator_order",
               v.operator_order.has_value() ? json(*v.operator_order) : json("zero operator")},
              {"min_coefficient_class", to_json(v.min_coefficient_class)}};
  if (v.order_bound) out["order_bound"] = *v.order_bound;
  if (v.violation) out["violation"] = to_json(*v.violation);
  return out;
}

json to_json(const ReconstructionReport& r) {
  return {{"operator", to_json(r.recovered)},
          {"mode", r.symbolic ? "exact" : "float"},
          {"probes_used", r.probes_used},
          {"max_residual", r.max_residual},
          {"residual_exact_zero", r.residual_exact_zero}};
}

json to_json(const LinearityReport& r) {
  return {{"pass", r.pass}, {"worst_violation", r.worst_violation}};
}

json to_json(const SupportConditionReport& r) {
  return {{"pass", r.pass},
          {"worst_outside", r.worst_outside},
          {"points_checked", r.points_checked}};
}

json to_json(const FlatnessTransferReport& r) {
  json out = {{"pass", r.pass}, {"exact", r.exact}, {"worst_violation", r.worst_violation}};
  if (r.worst_probe) out["worst_probe"] = to_json(*r.worst_probe);
  return out;
}

}  // namespace jetop
