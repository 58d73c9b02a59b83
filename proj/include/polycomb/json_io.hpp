#pragma once

#include "json.hpp"

#include "polycomb/combinatorics.hpp"
#include "polycomb/graph.hpp"
#include "polycomb/hull.hpp"
#include "polycomb/pointset.hpp"

// JSON wire formats. All big integers travel as decimal strings so values
// round-trip bit-exactly regardless of magnitude. Parsers throw
// ValidationError on malformed input; serializers emit keys in a fixed order
// so identical values produce identical bytes.
namespace polycomb {

using Json = nlohmann::ordered_json;

Json point_set_to_json(const PointSet& x);
PointSet point_set_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json bool_matrix_to_json(const BoolMatrix& m);
BoolMatrix bool_matrix_from_json(const Json& j);

Json incidence_to_json(const IncidenceStructure& inc);
IncidenceStructure incidence_from_json(const Json& j);

Json ldt_to_json(const LinearDecisionTree& t);
LinearDecisionTree ldt_from_json(const Json& j);

// Parses text as JSON, mapping parse failures to ValidationError.
Json parse_json_text(const std::string& text);

}  // namespace polycomb
