#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "cyclo/enumerate.hpp"
#include "cyclo/graph.hpp"

namespace cyclo {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element encoding: {"c": [8 integer numerators], "den": 1|2}, reduced.
nlohmann::json element_to_json(const RingElement& e);
RingElement element_from_json(const nlohmann::json& j, RingId ring);

// Graph document: {"ring": "...", "n": N, "matrix": [[elem,...],...],
// "name"?: ..., "source"?: ...}
nlohmann::json graph_to_json(const RGraph& g, const std::string& name = "");
RGraph graph_from_json(const nlohmann::json& j);

RGraph load_graph_file(const std::string& path);

nlohmann::json level_to_json(const EnumerationLevel& level,
                             bool integral_only = false);
nlohmann::json levels_to_json(const std::vector<EnumerationLevel>& levels,
                              bool integral_only = false);

// DOT rendering; negative edge weights drawn dashed, charges as labels.
std::string to_dot(const RGraph& g, const std::string& name = "G");

}  // namespace cyclo
