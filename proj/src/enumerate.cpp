#include "ghom/enumerate.hpp"

namespace ghom {

GraphFamily::GraphFamily(std::size_t n, bool with_loops) : n_(n), loops_(with_loops) {
  if (n > kMaxEnumeratedVertices) {
    throw Error(ErrorCode::TooLarge, "graph enumeration is capped at " +
                                         std::to_string(kMaxEnumeratedVertices) + " vertices");
  }
  bits_ = static_cast<unsigned>(n * (n - (n > 0 ? 1 : 0)) / 2 + (with_loops ? n : 0));
}

Graph GraphFamily::at(std::uint64_t k) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<Vertex, Vertex>> edges;
  unsigned bit = 0;
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j, ++bit) {
      if ((k >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  if (loops_) {
    for (Vertex i = 0; i < n_; ++i, ++bit) {
      if ((k >> bit) & 1U) edges.emplace_back(i, i);
    }
  }
  return Graph::from_indices(std::move(names), edges);
}

void enumerate_graphs(std::size_t max_vertices, bool with_loops,
                      const std::function<void(const Graph&)>& visit) {
  if (max_vertices > kMaxEnumeratedVertices) {
    throw Error(ErrorCode::TooLarge, "graph enumeration is capped at " +
                                         std::to_string(kMaxEnumeratedVertices) + " vertices");
  }
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    GraphFamily family(n, with_loops);
    for (std::uint64_t k = 0; k < family.size(); ++k) visit(family.at(k));
  }
}

std::vector<Graph> all_graphs(std::size_t max_vertices, bool with_loops) {
  std::vector<Graph> out;
  enumerate_graphs(max_vertices, with_loops, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace ghom
