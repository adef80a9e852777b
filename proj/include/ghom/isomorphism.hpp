#pragma once

#include <optional>
#include <vector>

#include "ghom/graph.hpp"

namespace ghom {

/// Witness that two graphs are isomorphic: mutually inverse edge-preserving
/// bijections.
struct Isomorphism {
  VertexMap forward;
  VertexMap backward;
};

/// Returns a bijection V(g) -> V(h) preserving adjacency in both directions
/// (loops map to loops), or nothing. Vertices are first split by iterated
/// neighbourhood-colour refinement run jointly on both graphs; the remaining
/// choices are resolved by backtracking in vertex order.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

std::optional<Isomorphism> are_isomorphic(const GraphRef& g, const GraphRef& h);

/// True iff `forward` is an adjacency-preserving and reflecting bijection.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& forward);

}  // namespace ghom
