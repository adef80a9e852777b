#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ghom/error.hpp"

namespace ghom {

using Vertex = std::uint32_t;

/// Finite undirected graph with optional loops and at most one edge per
/// unordered pair. Vertices carry opaque string names; internally they are
/// indexed 0..order()-1 in insertion order, and every enumeration in the
/// library follows that order.
///
/// A looped vertex is its own neighbour: `v` appears in `neighbors(v)`.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from names and name pairs. Duplicate vertex names and
  /// edges with undeclared endpoints throw; repeated edges are deduplicated.
  static Graph from_names(const std::vector<std::string>& names,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based construction; `edges` may contain repeats and both
  /// orientations.
  static Graph from_indices(std::vector<std::string> names,
                            const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Vertex> find(std::string_view name) const;
  /// Like find() but throws UnknownVertex.
  Vertex index(std::string_view name) const;

  bool adjacent(Vertex u, Vertex v) const noexcept {
    if (!dense_.empty()) {
      const std::size_t bit = static_cast<std::size_t>(u) * order() + v;
      return (dense_[bit >> 6] >> (bit & 63)) & 1U;
    }
    return adjacent_sparse(u, v);
  }
  bool looped(Vertex v) const noexcept { return adjacent(v, v); }

  /// Sorted neighbour list; contains `v` itself when `v` is looped.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// Number of edges counting each loop once.
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t loop_count() const noexcept;

  /// Edges as (u, v) with u <= v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  bool adjacent_sparse(Vertex u, Vertex v) const noexcept;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> dense_;
  std::size_t edge_count_ = 0;
};

using GraphRef = std::shared_ptr<const Graph>;

inline GraphRef share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Standard families. Integer-labelled vertices are named by their decimal index.
Graph path_graph(std::size_t n);          // P_n: n+1 vertices 0..n
Graph looped_path_graph(std::size_t n);   // P_n with a loop on every vertex
Graph cycle_graph(std::size_t n);         // n >= 3
Graph complete_graph(std::size_t n);      // n >= 1
Graph looped_vertex();                    // single vertex with a loop

/// Categorical product; vertex (v, w) is named "(v,w)" and vertices are
/// ordered lexicographically by (index in g, index in h).
Graph product(const Graph& g, const Graph& h);

/// Index of (v, w) in product(g, h).
inline Vertex product_index(const Graph& h, Vertex v, Vertex w) {
  return static_cast<Vertex>(v * h.order() + w);
}

/// Disjoint union; left vertices are prefixed "L:", right ones "R:".
Graph coproduct(const Graph& g, const Graph& h);

std::vector<Vertex> neighborhood(const Graph& g, Vertex v);

/// Subgraph induced on `keep` (which must be valid vertices); vertex order
/// is inherited from `g` regardless of the order of `keep`.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph induced_subgraph_by_name(const Graph& g, const std::vector<std::string>& keep);

/// Vertices with an empty neighbourhood.
std::vector<Vertex> isolated_vertices(const Graph& g);

/// A total set map V(source) -> V(target); not required to preserve edges.
struct VertexMap {
  GraphRef source;
  GraphRef target;
  std::vector<Vertex> image;

  VertexMap() = default;
  VertexMap(GraphRef s, GraphRef t, std::vector<Vertex> img);

  /// Builds from a name -> name assignment. Missing or undeclared vertices
  /// throw InvalidMap.
  static VertexMap from_names(GraphRef s, GraphRef t,
                              const std::map<std::string, std::string>& assignment);
  /// Shorthand for maps whose target names are single characters, listed in
  /// source order: `from_word(C4, P2, "babc")`.
  static VertexMap from_word(GraphRef s, GraphRef t, std::string_view word);

  Vertex operator()(Vertex v) const { return image[v]; }

  /// Target names joined in source order ("babc" style when names are single
  /// characters, space separated otherwise).
  std::string word() const;

  friend bool operator==(const VertexMap& a, const VertexMap& b);
};

bool same_graph(const GraphRef& a, const GraphRef& b);

/// True iff every edge u~v of `source` (loops included) has image(u)~image(v).
bool is_morphism(const Graph& source, const Graph& target, std::span<const Vertex> image);
bool is_morphism(const VertexMap& f);

VertexMap identity_map(const GraphRef& g);
/// outer ∘ inner; requires inner.target == outer.source.
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

/// Throws unless `f` is a graph morphism.
void require_morphism(const VertexMap& f, std::string_view what);

}  // namespace ghom
