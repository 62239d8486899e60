#pragma once

#include <string_view>

#include "json.hpp"

#include "barbed/distance.hpp"
#include "barbed/graph.hpp"
#include "barbed/mst.hpp"
#include "barbed/path_system.hpp"
#include "barbed/persistence.hpp"
#include "barbed/theory.hpp"

namespace barbed {

using Json = nlohmann::ordered_json;

Json to_json(const WeightedGraph& g);
Json to_json(const DistanceMatrix& d);
Json to_json(const SpanningTree& t);
/// {"graph": <graph>, "paths": [{"pair": [u, v], "route": [u, ..., v]}]}
Json to_json(const PathChoiceFunction& pcf, const WeightedGraph& g);
/// Infinite deaths are written as the string "inf".
Json to_json(const Barcode& code);
Json to_json(const ConsistencyReport& r);
Json to_json(const DominanceReport& r);
Json to_json(const MetricReport& r);
Json to_json(const InjectionReport& r);
Json to_json(const BirthEdgeAudit& a);
Json to_json(const MstInvarianceReport& r);
Json to_json(const PosetExtremes& p);
Json to_json(const CorpusParams& p);

/// Reads the "paths" array of a pcf document against g; the "graph" member
/// is informational. Throws Error on malformed documents and InvalidGraph on
/// routes that do not fit g.
PathChoiceFunction parse_pcf_json(std::string_view text, const WeightedGraph& g);

/// Inverse of to_json(Barcode).
Barcode parse_barcode_json(std::string_view text);

}  // namespace barbed
