#pragma once

#include <json.hpp>

#include "lgm/annihilator.hpp"
#include "lgm/constructors.hpp"
#include "lgm/corpus.hpp"
#include "lgm/expr.hpp"
#include "lgm/polytope.hpp"
#include "lgm/series.hpp"

// JSON forms of the library's values. Big integers and rationals are
// written as decimal strings ("12", "-7/3"); expressions as strings in the
// parser grammar.
namespace lgm {

using Json = nlohmann::ordered_json;

Json to_json(const IntegerSeries& s);
IntegerSeries series_from_json(const Json& j);

Json to_json(const MatchReport& m);
Json to_json(const Polytope& p);
Json to_json(const SemiweakReport& r);
Json to_json(const EhrhartData& d);

/// {order, degree, coeffs: [[l, j, "p/q"], ...], text}
Json to_json(const DifferentialOperator& op);
DifferentialOperator operator_from_json(const Json& j);

/// {variables: [...], constraints: ["expr", ...], potential: "expr"}
Json to_json(const ConstrainedModel& m);
ConstrainedModel model_from_json(const Json& j);

Json to_json(const NamedPolynomial& p);
Json to_json(const Elimination& e);
Json to_json(const IdentityResult& r);

Json to_json(const FanoEntry& e);
Json to_json(const VerificationReport& r);

}  // namespace lgm
