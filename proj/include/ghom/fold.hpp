#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghom/graph.hpp"

namespace ghom {

/// Retraction of `graph` sending `removed` onto `into` and fixing everything
/// else. Valid iff removed != into and N(removed) ⊆ N(into), with a looped
/// vertex counted as its own neighbour.
struct Fold {
  GraphRef graph;
  Vertex removed;
  Vertex into;

  std::string describe() const;  // "removed->into" by name
};

bool is_valid_fold(const Graph& g, Vertex removed, Vertex into);

/// Every fold of g, ordered by (removed, into) in vertex order.
std::vector<Fold> find_folds(const GraphRef& g);

bool is_stiff(const Graph& g);

/// Induced subgraph on V(g) minus the removed vertex; InvalidFold otherwise.
Graph apply_fold(const Graph& g, const Fold& f);

/// The fold as an endomorphism of its graph.
VertexMap fold_endomorphism(const Fold& f);

enum class FoldPolicy { First, SeededRandom };

struct PleatResult {
  GraphRef original;
  GraphRef pleat;
  /// fold_sequence[i].graph is the graph after the first i folds.
  std::vector<Fold> fold_sequence;
  /// Composite of the folds: original -> pleat.
  VertexMap embedding;
  /// Inclusion pleat -> original (by vertex name).
  VertexMap inclusion;
};

/// Folds until stiff. Isolated vertices go first (into the lowest non-isolated
/// vertex, or the lowest other vertex when every vertex is isolated), then
/// the policy picks among find_folds(): `First` takes the first entry,
/// `SeededRandom` draws uniformly with a std::mt19937_64 seeded by `seed`.
/// Throws EmptyGraph on an empty input.
PleatResult pleat(const GraphRef& g, FoldPolicy policy = FoldPolicy::First,
                  std::uint64_t seed = 0);

struct HomotopyEquivalence {
  bool equivalent = false;
  /// G -> H and H -> G through the pleat isomorphism, when equivalent.
  std::optional<VertexMap> forward;
  std::optional<VertexMap> backward;
};

/// Compares pleats up to isomorphism; EmptyGraph on empty input.
HomotopyEquivalence homotopy_equivalent(const GraphRef& g, const GraphRef& h);

/// G with a twin v* of v: N(v*) = N(v) and v* looped iff v is.
struct VertexDuplication {
  GraphRef hat;
  Vertex twin;         // index of v* in hat
  VertexMap include;   // G -> hat, identity on names
  VertexMap include_twin;  // G -> hat, v |-> v*
  VertexMap retract;   // hat -> G, v* |-> v
};

VertexDuplication duplicate_vertex(const GraphRef& g, Vertex v);

/// pleat(G x H) ≅ pleat(G) x pleat(H). Throws Precondition naming the first
/// isolated vertex when either input has one.
bool pleat_product_check(const GraphRef& g, const GraphRef& h);

/// Given a fold of G (v into v'), the folds of G x H removing (v, w) into
/// (v', w) for every w of H in order, each expressed on the graph left by the
/// previous ones.
std::vector<Fold> lift_fold_to_product(const Graph& g, const Graph& h, const Fold& f);

}  // namespace ghom
