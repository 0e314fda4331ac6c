#pragma once

#include <string>

#include "json.hpp"
#include "momaps/mo_graph.hpp"
#include "momaps/scheme.hpp"

namespace momaps {

using json = nlohmann::json;

json graph_to_json(const MOGraph& g);
MOGraph graph_from_json(const json& j);

// Chain-vertices are listed with their node id; "vertices" counts all nodes.
json scheme_to_json(const SchemeGraph& s);
SchemeGraph scheme_from_json(const json& j);

json read_json_file(const std::string& path);
MOGraph load_graph_file(const std::string& path);

}  // namespace momaps
