#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ghom/graph.hpp"

namespace ghom {

using Assignment = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultExponentialCap = 1'000'000;

/// Edge predicate of the exponential graph H^G: f ~ g iff every edge u~v of
/// G (loops included) has f(u) ~ g(v) in H. Because G's edge relation is
/// symmetric this also forces f(v) ~ g(u).
bool exp_edge(const Graph& exponent, const Graph& base, std::span<const Vertex> f,
              std::span<const Vertex> g);

/// Checked form: both maps must share source and target.
bool exp_edge(const VertexMap& f, const VertexMap& g);

/// Calls `visit` for every set map g with exp_edge(f, g), in lexicographic
/// order of assignments. Each g(v) is drawn from the intersection of
/// N(f(u)) over the neighbours u of v, so nothing outside the neighbourhood
/// of f is touched.
void for_each_exp_neighbor(const Graph& exponent, const Graph& base, std::span<const Vertex> f,
                           const std::function<void(const Assignment&)>& visit);

/// H^G with an optional explicit realisation. The realised graph lists the
/// |V(H)|^|V(G)| set maps in lexicographic assignment order (first source
/// vertex most significant), each named by VertexMap::word().
struct ExponentialGraph {
  GraphRef exponent;  // G
  GraphRef base;      // H
  std::optional<Graph> realized;

  std::uint64_t vertex_count() const;
  /// Position of an assignment in the realised vertex order.
  std::uint64_t rank(std::span<const Vertex> f) const;
  Assignment unrank(std::uint64_t r) const;
};

/// Throws TooLarge (naming the required cap) when |V(H)|^|V(G)| > cap.
ExponentialGraph realize_exponential(const GraphRef& g, const GraphRef& h,
                                     std::uint64_t cap = kDefaultExponentialCap);

/// Hom(G, H) in lexicographic assignment order, with a lookup table from
/// assignment to position.
class HomSet {
 public:
  HomSet(GraphRef source, GraphRef target);

  const GraphRef& source() const noexcept { return source_; }
  const GraphRef& target() const noexcept { return target_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const Assignment& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<Assignment>& maps() const noexcept { return maps_; }
  std::optional<std::size_t> find(std::span<const Vertex> f) const;
  VertexMap map(std::size_t i) const { return VertexMap(source_, target_, maps_[i]); }

  /// Positions adjacent to i in H^G (including i itself: every hom is looped).
  std::vector<std::size_t> neighbors(std::size_t i) const;

 private:
  GraphRef source_;
  GraphRef target_;
  std::vector<Assignment> maps_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Every graph morphism G -> H, by backtracking over source vertices in order
/// with candidates restricted to the common neighbourhood of already-placed
/// neighbours.
std::vector<Assignment> enumerate_hom_assignments(const Graph& g, const Graph& h);
std::vector<VertexMap> enumerate_homs(const GraphRef& g, const GraphRef& h);

/// Subgraph of H^G induced on the morphisms; every vertex is looped.
Graph hom_graph(const GraphRef& g, const GraphRef& h);

/// Connected-component id of each hom in `homs` under exp_edge.
std::vector<std::size_t> hom_components(const HomSet& homs);

/// phi_*: f |-> phi ∘ f. Throws NotMorphism unless phi is a morphism.
VertexMap postcompose(const VertexMap& phi, const VertexMap& f);
/// psi^*: f |-> f ∘ psi. Throws NotMorphism unless psi is a morphism.
VertexMap precompose(const VertexMap& psi, const VertexMap& f);

/// A map G -> K^H kept as one assignment H -> K per vertex of G.
struct CurriedMap {
  GraphRef g;
  GraphRef h;
  GraphRef k;
  std::vector<Assignment> rows;

  /// True iff rows[u] ~ rows[v] in K^H whenever u ~ v in G.
  bool is_morphism() const;
  /// The same map as a VertexMap into a realised K^H.
  VertexMap into(const GraphRef& realized_exponential, const ExponentialGraph& kh) const;
};

/// f : G x H -> K  |->  v |-> (w |-> f(v, w)). `f.source` must be
/// product(*g, *h); NotMorphism when f is not a morphism.
CurriedMap curry(const VertexMap& f, const GraphRef& g, const GraphRef& h);
VertexMap uncurry(const CurriedMap& c, const GraphRef& gxh);

}  // namespace ghom
