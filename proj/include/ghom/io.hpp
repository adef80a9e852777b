#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "ghom/graph.hpp"
#include "ghom/groupoid.hpp"
#include "ghom/homotopy.hpp"

namespace ghom::io {

/// Graph document: {"vertices": [...], "edges": [[u, v], ...]}. Vertex ids
/// may be strings or integers (integers become decimal strings); a loop is
/// an edge with repeated endpoints; repeated edges are merged. Malformed
/// JSON, duplicate vertices and edges with unknown endpoints each raise a
/// distinct Parse / DuplicateVertex / UnknownVertex error with a location.
Graph parse_graph(std::string_view text);

/// Normalised form: vertices in order, edges as [u, v] with u before v in
/// vertex order, sorted. parse_graph(emit_graph(g)) == g.
std::string emit_graph(const Graph& g);

/// Graphviz rendering; loops are self-edges.
std::string emit_dot(const Graph& g, std::string_view name = "G");

/// Resolves a string graph reference (a file path) to a graph.
using GraphResolver = std::function<GraphRef(const std::string&)>;

/// {"source": <ref>, "target": <ref>, "map": {"0": "b", ...}}. A reference is
/// an inline graph object or a string handed to `resolve`; missing
/// references fall back to `source` / `target`.
VertexMap parse_vertex_map(std::string_view text, const GraphRef& source, const GraphRef& target,
                           const GraphResolver& resolve = {});
std::string emit_vertex_map(const VertexMap& f);

/// {"frames": [<vertex map>, ...]}; frames may omit their graphs.
Homotopy parse_homotopy(std::string_view text, const GraphRef& source, const GraphRef& target,
                        const GraphResolver& resolve = {});
std::string emit_homotopy(const Homotopy& h);

/// {"graph": <ref>, "vertices": [...]}.
Walk parse_walk(std::string_view text, const GraphRef& graph, const GraphResolver& resolve = {});
std::string emit_walk(const Walk& w);

std::string read_file(const std::string& path);

}  // namespace ghom::io
