#pragma once

#include <json.hpp>

#include "agile/graph.hpp"
#include "agile/minor_model.hpp"

namespace agile {

using json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u,v],...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j);

/// {"branch": {"<pattern vertex>": [host vertices...]}}
json minor_model_to_json(const MinorModel& model);

/// Reads the branch map; the pattern graph must be supplied by the caller.
MinorModel minor_model_from_json(const json& j, Graph pattern);

/// Reads a graph file, picking the format from `format` ("graph6" or
/// "json") or, when empty, from the file extension (.g6 vs .json).
Graph read_graph_file(const std::string& path, std::string format = "");
void write_graph_file(const std::string& path, const Graph& g, const std::string& format);

}  // namespace agile
