#include "ghom/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ghom::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " +
                                      e.what());
  }
}

std::string vertex_id(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::Parse, where + ": vertex ids must be strings or integers");
}

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "graph document must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::Parse, "graph document needs a \"vertices\" array");
  }
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> seen;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    std::string id = vertex_id(vs[i], where);
    if (auto [it, fresh] = seen.emplace(id, i); !fresh) {
      throw Error(ErrorCode::DuplicateVertex, where + ": '" + id + "' already declared at vertices[" +
                                                  std::to_string(it->second) + "]");
    }
    names.push_back(std::move(id));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw Error(ErrorCode::Parse, "\"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) {
        throw Error(ErrorCode::Parse, where + ": an edge is a two-element array");
      }
      std::string a = vertex_id(es[i][0], where);
      std::string b = vertex_id(es[i][1], where);
      for (const auto* end : {&a, &b}) {
        if (!seen.count(*end)) {
          throw Error(ErrorCode::UnknownVertex, where + ": endpoint '" + *end + "' is not declared");
        }
      }
      edges.emplace_back(std::move(a), std::move(b));
    }
  }
  return Graph::from_names(names, edges);
}

json graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = g.names();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({g.name(u), g.name(v)}));
  doc["edges"] = std::move(edges);
  return doc;
}

GraphRef graph_ref(const json& doc, const char* key, const GraphRef& fallback,
                   const GraphResolver& resolve) {
  if (!doc.is_object() || !doc.contains(key)) {
    if (!fallback) throw Error(ErrorCode::Parse, std::string("missing \"") + key + "\" graph");
    return fallback;
  }
  const auto& ref = doc[key];
  if (ref.is_object()) return share(graph_from_json(ref));
  if (ref.is_string() && resolve) return resolve(ref.get<std::string>());
  if (fallback) return fallback;
  throw Error(ErrorCode::Parse, std::string("cannot resolve \"") + key + "\" graph reference");
}

VertexMap map_from_json(const json& doc, const GraphRef& source, const GraphRef& target,
                        const GraphResolver& resolve) {
  const GraphRef s = graph_ref(doc, "source", source, resolve);
  const GraphRef t = graph_ref(doc, "target", target, resolve);
  const json& m = doc.is_object() && doc.contains("map") ? doc["map"] : doc;
  if (!m.is_object()) throw Error(ErrorCode::Parse, "\"map\" must be an object");
  std::map<std::string, std::string> assignment;
  for (const auto& [k, v] : m.items()) assignment[k] = vertex_id(v, "map[" + k + "]");
  return VertexMap::from_names(s, t, assignment);
}

json map_to_json(const VertexMap& f) {
  json m = json::object();
  for (Vertex v = 0; v < f.source->order(); ++v) m[f.source->name(v)] = f.target->name(f.image[v]);
  return m;
}

}  // namespace

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string emit_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string emit_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "graph " << quote(std::string(name)) << " {\n";
  for (const auto& n : g.names()) out << "  " << quote(n) << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << quote(g.name(u)) << " -- " << quote(g.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

VertexMap parse_vertex_map(std::string_view text, const GraphRef& source, const GraphRef& target,
                           const GraphResolver& resolve) {
  return map_from_json(parse_json(text), source, target, resolve);
}

std::string emit_vertex_map(const VertexMap& f) {
  json doc;
  doc["source"] = graph_to_json(*f.source);
  doc["target"] = graph_to_json(*f.target);
  doc["map"] = map_to_json(f);
  return doc.dump() + "\n";
}

Homotopy parse_homotopy(std::string_view text, const GraphRef& source, const GraphRef& target,
                        const GraphResolver& resolve) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array()) {
    throw Error(ErrorCode::Parse, "homotopy document needs a \"frames\" array");
  }
  const GraphRef s = graph_ref(doc, "source", source, resolve);
  const GraphRef t = graph_ref(doc, "target", target, resolve);
  std::vector<VertexMap> maps;
  for (const auto& frame : doc["frames"]) maps.push_back(map_from_json(frame, s, t, resolve));
  return Homotopy::from_maps(maps);
}

std::string emit_homotopy(const Homotopy& h) {
  json doc;
  doc["source"] = graph_to_json(*h.source);
  doc["target"] = graph_to_json(*h.target);
  json frames = json::array();
  for (std::size_t i = 0; i < h.frames.size(); ++i) {
    json frame;
    frame["map"] = map_to_json(h.frame(i));
    frames.push_back(std::move(frame));
  }
  doc["frames"] = std::move(frames);
  return doc.dump() + "\n";
}

Walk parse_walk(std::string_view text, const GraphRef& graph, const GraphResolver& resolve) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::Parse, "walk document needs a \"vertices\" array");
  }
  const GraphRef g = graph_ref(doc, "graph", graph, resolve);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    names.push_back(vertex_id(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  }
  if (names.empty()) throw Error(ErrorCode::Parse, "a walk needs at least one vertex");
  Walk w = Walk::from_names(g, names);
  if (!w.valid()) throw Error(ErrorCode::Parse, "consecutive walk vertices are not adjacent");
  return w;
}

std::string emit_walk(const Walk& w) {
  json doc;
  json vs = json::array();
  for (Vertex v : w.vertices) vs.push_back(w.graph->name(v));
  doc["vertices"] = std::move(vs);
  return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ghom::io
