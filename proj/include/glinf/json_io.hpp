#pragma once

#include "glinf/casimir.hpp"
#include "glinf/charmat.hpp"
#include "glinf/gt_oracle.hpp"
#include "glinf/tensor.hpp"
#include "glinf/weights.hpp"

#include <json.hpp>

namespace glinf {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// [2,1]; the zero weight is [].
Json to_json(const Weight& w);
Json to_json(const HighestWeight& w);

/// {"lambda":[2,1],"m":3,"closed":"12","recursive":"12","agree":true}
Json to_json(const EigenvalueReport& r);

/// {"lambda":[1,1],"mu":null,"n":3,"roots":["1","0","-2"],"residual_zero":true,"kernel_dims":[...]}
Json to_json(const IdentityCertificate& c);

/// {"lambda":[2,1],"mu":[1],"summands":[{"nu":[3,1],"mult":1},...]}
Json to_json(const Decomposition& d);

/// Basis patterns and every generator as (row, col, "p/q") triplets.
Json module_fixture(const ModuleRep& rep);

/// Reads a JSON integer array into a validated highest weight.
HighestWeight highest_weight_from_json(const Json& j);

}  // namespace glinf
