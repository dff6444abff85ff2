#pragma once

// Text formats: edge lists ("n m" then m lines "u v"), DOT, and JSON for
// graphs, labelings and verification reports.

#include "esg/graphs.hpp"
#include "esg/labeling.hpp"

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace esg::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Reads "n m" followed by m lines "u v". Blank lines and lines starting
/// with '#' are skipped.
Graph read_edge_list(std::istream& in);
Digraph read_arc_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
void write_arc_list(std::ostream& out, const Digraph& d);

/// Vertex names carry their labels when a labeling is given; edges carry
/// their weights.
std::string to_dot(const Graph& g, const Labeling* labeling = nullptr);
std::string to_dot(const Digraph& d, const Labeling* labeling = nullptr);

json to_json(const Graph& g);
json to_json(const Digraph& d);
Graph graph_from_json(const json& j);
Digraph digraph_from_json(const json& j);

/// { "group": "Z4xZ2", "values": [[r...], ...] }
json to_json(const Labeling& L);
Labeling labeling_from_json(const json& j);

json to_json(const WeightTable& t);

/// Weights, distinctness flag and witness for one labeling.
json verification_report(const Graph& g, const Labeling& L);
json verification_report(const Digraph& d, const Labeling& L);

/// Loads a graph from a file: JSON when the content starts with '{',
/// otherwise an edge list.
Graph load_graph(const std::string& path);
Digraph load_digraph(const std::string& path);
Labeling load_labeling(const std::string& path);

}  // namespace esg::io
