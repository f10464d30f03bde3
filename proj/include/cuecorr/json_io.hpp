#pragma once

#include <json.hpp>

#include "cuecorr/group_algebra.hpp"
#include "cuecorr/montecarlo.hpp"
#include "cuecorr/polynomial.hpp"

namespace cuecorr {

using nlohmann::json;

// Stable machine-readable forms; parse(emit(x)) == x for every kind.
json emit_rat(const Rat& q);
Rat parse_rat_json(const json& j);

json emit_class_vector(const ClassVector& v);
ClassVector parse_class_vector(const json& j);

json emit_polynomial(const PolynomialQ& p, const std::string& var);
PolynomialQ parse_polynomial(const json& j);

json emit_rational_function(const RationalFunctionQ& f, const std::string& var);
RationalFunctionQ parse_rational_function(const json& j);

json emit_estimate_report(const EstimateReport& r);
EstimateReport parse_estimate_report(const json& j);

}  // namespace cuecorr
