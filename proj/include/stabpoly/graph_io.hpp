#pragma once

#include "stabpoly/graph.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace stabpoly {

/// Standard graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u,v],...], "labels": [...]} with 0-based vertices;
/// "labels" is present only for labeled graphs.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Auto-detects JSON (first non-space byte '{') or graph6.
Graph parse_graph(std::string_view text);

}  // namespace stabpoly
