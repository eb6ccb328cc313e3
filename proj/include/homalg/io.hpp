#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "homalg/counterexample.hpp"
#include "homalg/graphs.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/tensor.hpp"

namespace homalg {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& spec);
Json to_json(const WeightedGraph& h);
/// Vertices are 1-based on the wire.
Json to_json(const LabeledGraph& g);
Json to_json(const WitnessResult& w);
Json to_json(const IsoCertificate& cert);
Json to_json(const RankReport& rep);
Json to_json(const ColumnSpaceReport& rep);
Json to_json(const ViolationReport& rep);

/// All parsers throw Error(Malformed) on bad input.
FieldSpec field_from_json(const Json& j);
WeightedGraph weighted_graph_from_json(const Json& j);
LabeledGraph labeled_graph_from_json(const Json& j);
Json parse_json(std::string_view text);

/// "1:2,2:3" (label:vertex, both 1-based) -> 0-based map; labels must be 1..k.
LabelMap parse_pin(std::string_view text);

}  // namespace homalg
