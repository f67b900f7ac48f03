#pragma once

#include <json.hpp>

#include "relfrac/expand.hpp"
#include "relfrac/homomorphism.hpp"
#include "relfrac/relfrac.hpp"

namespace relfrac {

using Json = nlohmann::ordered_json;

// {"num": "p", "den": "q", "display": "p/q"}
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const VertexSet& s);
Json to_json(const AssignmentF& f);
AssignmentF assignment_from_json(const Json& j, int universe);

Json to_json(const std::vector<DualTerm>& dist);
Json to_json(const RelFracResult& r);
Json to_json(const GammaResult& r);
Json to_json(const Homomorphism& h);

Json to_json(const ExpandOp& op);
Json to_json(const ExpandScript& s);
// Throws ParseError on malformed input.
ExpandScript expand_script_from_json(const Json& j);

Json graph_to_json(const Graph& g);

}  // namespace relfrac
