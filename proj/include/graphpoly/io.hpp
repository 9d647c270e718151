#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphpoly/config_poly.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"
#include "graphpoly/period.hpp"
#include "graphpoly/point_count.hpp"
#include "graphpoly/strata.hpp"

namespace graphpoly {

using Json = nlohmann::ordered_json;

// {"vertices": n, "edges": [[u, v], ...]}, 0-based.
Json graph_to_json(const Graph& g);
// Throws ValidationError on malformed input or out-of-range vertices.
Graph graph_from_json(const Json& j);
Graph parse_graph(std::string_view text);

// {"vars": [names], "terms": [{"exp": [...], "coef": "decimal"}]}
Json mpoly_to_json(const MPoly& p, const std::vector<std::string>& names = {});
MPoly mpoly_from_json(const Json& j);

// {"edges": E, "basis": [["p/q", ...], ...]}
Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

// {"members": [hex], "maximal_cycles": [hex], "rounds": [[hex]], "chains": [[hex]]}
Json subspaces_to_json(const MotivicFamily& family, const BlowupSequence& rounds,
                       const std::vector<std::vector<EdgeSet>>& chains);

Json count_report_to_json(const CountReport& r);
Json period_estimate_to_json(const PeriodEstimate& e);
Json trace_to_json(const StratificationTrace& t);

std::string read_file(const std::string& path);
Json parse_json(std::string_view text);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace graphpoly
