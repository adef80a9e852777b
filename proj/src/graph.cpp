#include "ghom/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ghom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMap: return "invalid-map";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::UnknownVertex: return "unknown-vertex";
    case ErrorCode::DuplicateVertex: return "duplicate-vertex";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::Mismatch: return "mismatch";
    case ErrorCode::NotMorphism: return "not-a-morphism";
    case ErrorCode::NotAdjacent: return "not-adjacent";
    case ErrorCode::EndpointMismatch: return "endpoint-mismatch";
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::Precondition: return "precondition-violation";
    case ErrorCode::InvalidFold: return "invalid-fold";
    case ErrorCode::NotPrunable: return "not-prunable";
    case ErrorCode::NotHomotopic: return "not-homotopic";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::UnknownSuite: return "unknown-suite";
  }
  return "error";
}

namespace {

// Dense adjacency bits are kept for graphs up to this order (2 MiB matrix).
constexpr std::size_t kDenseLimit = 4096;

std::vector<std::string> decimal_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

Graph Graph::from_indices(std::vector<std::string> names,
                          const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  const std::size_t n = names.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(names[i], static_cast<Vertex>(i)).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + names[i] + "' declared twice");
    }
  }
  g.names_ = std::move(names);
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint index out of range");
    }
    g.adj_[u].push_back(v);
    if (u != v) g.adj_[v].push_back(u);
  }
  std::size_t twice_plain = 0;
  std::size_t loops = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& row = g.adj_[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (Vertex u : row) (u == v ? loops : twice_plain) += 1;
  }
  g.edge_count_ = twice_plain / 2 + loops;
  if (n <= kDenseLimit && n > 0) {
    g.dense_.assign((n * n + 63) / 64, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : g.adj_[v]) {
        const std::size_t bit = static_cast<std::size_t>(v) * n + u;
        g.dense_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
      }
    }
  }
  return g;
}

Graph Graph::from_names(const std::vector<std::string>& names,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], static_cast<Vertex>(i)).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + names[i] + "' declared twice");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw Error(ErrorCode::UnknownVertex,
                  "edge [" + a + "," + b + "] has an undeclared endpoint");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_indices(names, pairs);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

bool Graph::adjacent_sparse(Vertex u, Vertex v) const noexcept {
  if (u >= adj_.size()) return false;
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::loop_count() const noexcept {
  std::size_t loops = 0;
  for (Vertex v = 0; v < order(); ++v) loops += looped(v) ? 1 : 0;
  return loops;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u <= v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_indices(decimal_names(n + 1), edges);
}

Graph looped_path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i <= n; ++i) {
    edges.emplace_back(i, i);
    if (i < n) edges.emplace_back(i, i + 1);
  }
  return Graph::from_indices(decimal_names(n + 1), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidParameter,
                "cycle_graph needs n >= 3, got " + std::to_string(n));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_indices(decimal_names(n), edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "complete_graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_indices(decimal_names(n), edges);
}

Graph looped_vertex() { return Graph::from_indices({"0"}, {{0, 0}}); }

Graph product(const Graph& g, const Graph& h) {
  std::vector<std::string> names;
  names.reserve(g.order() * h.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < h.order(); ++w) {
      names.push_back("(" + g.name(v) + "," + h.name(w) + ")");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [v1, v2] : g.edges()) {
    for (Vertex w1 = 0; w1 < h.order(); ++w1) {
      for (Vertex w2 : h.neighbors(w1)) {
        edges.emplace_back(product_index(h, v1, w1), product_index(h, v2, w2));
      }
    }
  }
  return Graph::from_indices(std::move(names), edges);
}

Graph coproduct(const Graph& g, const Graph& h) {
  std::vector<std::string> names;
  names.reserve(g.order() + h.order());
  for (const auto& n : g.names()) names.push_back("L:" + n);
  for (const auto& n : h.names()) names.push_back("R:" + n);
  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_indices(std::move(names), edges);
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  auto n = g.neighbors(v);
  return {n.begin(), n.end()};
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> remap(g.order(), -1);
  for (Vertex v : keep) {
    if (v >= g.order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    remap[v] = 0;
  }
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (remap[v] >= 0) {
      remap[v] = static_cast<int>(names.size());
      names.push_back(g.name(v));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    if (remap[u] >= 0 && remap[v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(remap[u]), static_cast<Vertex>(remap[v]));
    }
  }
  return Graph::from_indices(std::move(names), edges);
}

Graph induced_subgraph_by_name(const Graph& g, const std::vector<std::string>& keep) {
  std::vector<Vertex> idx;
  idx.reserve(keep.size());
  for (const auto& n : keep) idx.push_back(g.index(n));
  return induced_subgraph(g, idx);
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

VertexMap::VertexMap(GraphRef s, GraphRef t, std::vector<Vertex> img)
    : source(std::move(s)), target(std::move(t)), image(std::move(img)) {
  if (!source || !target) throw Error(ErrorCode::InvalidMap, "map needs both graphs");
  if (image.size() != source->order()) {
    throw Error(ErrorCode::InvalidMap, "assignment must cover every source vertex");
  }
  for (Vertex w : image) {
    if (w >= target->order()) {
      throw Error(ErrorCode::InvalidMap, "image vertex not declared in target");
    }
  }
}

VertexMap VertexMap::from_names(GraphRef s, GraphRef t,
                                const std::map<std::string, std::string>& assignment) {
  std::vector<Vertex> img(s->order(), 0);
  std::vector<bool> seen(s->order(), false);
  for (const auto& [from, to] : assignment) {
    auto v = s->find(from);
    if (!v) throw Error(ErrorCode::InvalidMap, "'" + from + "' is not a source vertex");
    auto w = t->find(to);
    if (!w) throw Error(ErrorCode::InvalidMap, "'" + to + "' is not a target vertex");
    img[*v] = *w;
    seen[*v] = true;
  }
  for (Vertex v = 0; v < s->order(); ++v) {
    if (!seen[v]) throw Error(ErrorCode::InvalidMap, "no image for '" + s->name(v) + "'");
  }
  return VertexMap(std::move(s), std::move(t), std::move(img));
}

VertexMap VertexMap::from_word(GraphRef s, GraphRef t, std::string_view word) {
  if (word.size() != s->order()) {
    throw Error(ErrorCode::InvalidMap, "word length differs from source order");
  }
  std::vector<Vertex> img;
  img.reserve(word.size());
  for (char c : word) {
    auto w = t->find(std::string_view(&c, 1));
    if (!w) throw Error(ErrorCode::InvalidMap, std::string("'") + c + "' is not a target vertex");
    img.push_back(*w);
  }
  return VertexMap(std::move(s), std::move(t), std::move(img));
}

std::string VertexMap::word() const {
  bool single = true;
  for (const auto& n : target->names()) single = single && n.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += target->name(image[i]);
  }
  return out;
}

bool same_graph(const GraphRef& a, const GraphRef& b) {
  return a == b || (a && b && *a == *b);
}

bool operator==(const VertexMap& a, const VertexMap& b) {
  return a.image == b.image && same_graph(a.source, b.source) && same_graph(a.target, b.target);
}

bool is_morphism(const Graph& source, const Graph& target, std::span<const Vertex> image) {
  for (Vertex u = 0; u < source.order(); ++u) {
    for (Vertex v : source.neighbors(u)) {
      if (v < u) continue;
      if (!target.adjacent(image[u], image[v])) return false;
    }
  }
  return true;
}

bool is_morphism(const VertexMap& f) { return is_morphism(*f.source, *f.target, f.image); }

VertexMap identity_map(const GraphRef& g) {
  std::vector<Vertex> img(g->order());
  std::iota(img.begin(), img.end(), Vertex{0});
  return VertexMap(g, g, std::move(img));
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  if (!same_graph(inner.target, outer.source)) {
    throw Error(ErrorCode::Mismatch, "cannot compose: inner target differs from outer source");
  }
  std::vector<Vertex> img(inner.image.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = outer.image[inner.image[i]];
  return VertexMap(inner.source, outer.target, std::move(img));
}

void require_morphism(const VertexMap& f, std::string_view what) {
  if (!is_morphism(f)) {
    throw Error(ErrorCode::NotMorphism, std::string(what) + " is not a graph morphism");
  }
}

}  // namespace ghom
