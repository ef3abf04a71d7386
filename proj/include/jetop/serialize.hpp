#pragma once

#include <string>

#include "json.hpp"

#include "jetop/classify.hpp"
#include "jetop/diff_operator.hpp"
#include "jetop/jet.hpp"
#include "jetop/locality.hpp"
#include "jetop/piecewise_poly.hpp"
#include "jetop/reconstruct.hpp"

namespace jetop {

using nlohmann::json;

// Rationals travel as "p" or "p/q" strings; multi-indices as integer arrays.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const MultiIndex& alpha);
MultiIndex multi_index_from_json(const json& j);

json to_json(const Smoothness& s);

json to_json(const Polynomial<Rational>& p);
Polynomial<Rational> polynomial_from_json(const json& j, int dim);

json to_json(const Jet<Rational>& jet);

json to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const json& j);

json to_json(const GridSamples& g);
GridSamples grid_samples_from_json(const json& j);

json to_json(const CoefficientFn& c);

json to_json(const DiffOperator& op);
DiffOperator operator_from_json(const json& j);

json to_json(const ViolationWitness& w);
json to_json(const ClassificationVerdict& v);

json to_json(const ReconstructionReport& r);
json to_json(const LinearityReport& r);
json to_json(const SupportConditionReport& r);
json to_json(const FlatnessTransferReport& r);

}  // namespace jetop
