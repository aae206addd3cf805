#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "coverkit/baumslag.hpp"
#include "coverkit/constructors.hpp"
#include "coverkit/geometry.hpp"
#include "coverkit/schreier.hpp"

namespace coverkit {

// Graphs: {"n": N, "edges": [[u, v], ...]} with 0-indexed vertices.
nlohmann::json to_json(const MultiGraph& g);
// Also accepts a builder report holding a "graph" member. Throws
// PreconditionError on malformed input.
MultiGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Circuit& c);
nlohmann::json to_json(const GirthCertificate& c);

// Actions are serialized 1-indexed: {"n", "base", "x": [...], "y": [...]}.
nlohmann::json to_json(const SchreierAction& a);
SchreierAction action_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SurfaceAction& a);

nlohmann::json to_json(const RepConfig& c);
RepConfig rep_config_from_json(const nlohmann::json& j);

// Reads and parses a JSON file; PreconditionError when unreadable or invalid.
nlohmann::json read_json_file(const std::string& path);

}  // namespace coverkit
