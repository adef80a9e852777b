#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghom/graph.hpp"
#include "ghom/search.hpp"

namespace ghom {

/// A walk (v_0 ... v_n) with consecutive vertices adjacent.
struct Walk {
  GraphRef graph;
  std::vector<Vertex> vertices;

  static Walk from_names(const GraphRef& g, const std::vector<std::string>& names);
  /// Single-character vertex names: `Walk::from_word(g, "acbce")`.
  static Walk from_word(const GraphRef& g, std::string_view word);

  std::size_t length() const { return vertices.size() - 1; }
  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }

  bool valid() const;
  /// Valid, and every vertex on it is looped.
  bool looped() const;

  std::string str() const;  // "(a c b c e)"

  friend bool operator==(const Walk& a, const Walk& b) {
    return a.vertices == b.vertices && same_graph(a.graph, b.graph);
  }
};

/// Lowest i with v_i == v_{i+2}.
std::optional<std::size_t> first_prunable(const Walk& w);

/// Deletes v_i and v_{i+1}; NotPrunable unless v_i == v_{i+2}.
Walk prune_once(const Walk& w, std::size_t i);

/// Prunes at the lowest index until no index is prunable.
Walk prune_fully(const Walk& w);

/// (v_0 ... v_{n-1} v_n) -> (v_0 ... v_{n-1} v_n v_{n-1} v_n); InvalidParameter
/// for a length-0 walk.
Walk delta_extend(const Walk& w);

/// Joins a (ending at y) and b (starting at y); EndpointMismatch otherwise.
Walk concat(const Walk& a, const Walk& b);
Walk reversed(const Walk& w);

enum class WalkStepKind { Start, Prune, Unprune, Spider };

struct WalkStep {
  WalkStepKind kind;
  Walk walk;
};

/// True when `next` is obtained from `prev` by one step of the given kind.
bool is_valid_step(const Walk& prev, const WalkStep& next);

struct WalkEquivalenceReport {
  Verdict verdict = Verdict::NotFound;
  std::size_t compared_length = 0;
  std::uint64_t visited = 0;
  /// From `a` to `b`: prunes of a, padding (as unprunes), spider moves in the
  /// fixed-endpoint walk space, then b's padding and prunes in reverse.
  std::vector<WalkStep> witness;
};

/// Homotopy rel endpoints in the walk graph. Both walks are pruned; a parity
/// mismatch is a certified negative. The shorter is Δ-extended to the other's
/// length (a constant walk (x) is first padded to (x y x) with y the lowest
/// neighbour of x), and the two are joined by single interior-vertex
/// substitutions. On failure both are extended once more, up to
/// `limits.pad_budget` times.
WalkEquivalenceReport walks_equivalent(const Walk& a, const Walk& b,
                                       const SearchLimits& limits = {});

/// A morphism in the fundamental groupoid, held as its fully pruned walk.
struct GroupoidArrow {
  Walk representative;

  Vertex source() const { return representative.source(); }
  Vertex target() const { return representative.target(); }
  const GraphRef& graph() const { return representative.graph; }

  friend bool operator==(const GroupoidArrow& a, const GroupoidArrow& b) {
    return a.representative == b.representative;
  }
};

GroupoidArrow arrow(const Walk& w);
GroupoidArrow identity_arrow(const GraphRef& g, Vertex v);
/// a then b; requires target(a) == source(b).
GroupoidArrow compose_arrows(const GroupoidArrow& a, const GroupoidArrow& b);
GroupoidArrow invert_arrow(const GroupoidArrow& a);
bool arrows_equivalent(const GroupoidArrow& a, const GroupoidArrow& b,
                       const SearchLimits& limits = {});

/// phi_* : pointwise image of the representative, then pruned.
GroupoidArrow induced_functor(const VertexMap& phi, const GroupoidArrow& a);

/// Component at v of the natural isomorphism phi_* => psi_*, an arrow from
/// phi(v) to psi(v). Built along the spider chains of a shortest homotopy
/// from phi to psi: a move at x contributes (f(x) f(w) f'(x)) at v = x, with
/// w the lowest neighbour of x, and nothing elsewhere. Precondition when
/// either graph has an isolated vertex; NotHomotopic when no homotopy exists.
GroupoidArrow natural_iso_component(const VertexMap& phi, const VertexMap& psi, Vertex v);

struct FundamentalGroupProbe {
  std::vector<GroupoidArrow> classes;  // representatives, shortest first
  std::size_t walks_examined = 0;
  /// No class first appeared at length max_len - 1 or max_len.
  bool saturated = false;
  /// Pairs kept apart without a certificate (search not found or exhausted).
  std::size_t uncertified_splits = 0;
};

/// All non-prunable closed walks at `base` of length <= max_len, grouped by
/// walks_equivalent.
FundamentalGroupProbe fundamental_group_probe(const GraphRef& g, Vertex base,
                                              std::size_t max_len,
                                              const SearchLimits& limits = {});

}  // namespace ghom
