#pragma once

#include <optional>
#include <vector>

#include "ghom/exponential.hpp"
#include "ghom/graph.hpp"
#include "ghom/search.hpp"

namespace ghom {

/// A looped walk in H^G: a nonempty sequence of morphisms G -> H with each
/// consecutive pair adjacent in the exponential. length() is the number of
/// steps, i.e. the n of the interval I_n.
struct Homotopy {
  GraphRef source;  // G
  GraphRef target;  // H
  std::vector<Assignment> frames;

  std::size_t length() const { return frames.size() - 1; }
  VertexMap frame(std::size_t i) const { return VertexMap(source, target, frames.at(i)); }
  VertexMap front() const { return frame(0); }
  VertexMap back() const { return frame(frames.size() - 1); }

  /// Every frame a morphism and consecutive frames exp-adjacent.
  bool valid() const;

  static Homotopy constant(const VertexMap& f);
  /// Validates and throws NotMorphism / NotAdjacent on a bad sequence.
  static Homotopy from_maps(const std::vector<VertexMap>& maps);

  friend bool operator==(const Homotopy& a, const Homotopy& b) {
    return a.frames == b.frames && same_graph(a.source, b.source) &&
           same_graph(a.target, b.target);
  }
};

/// Shortest homotopy from f to g, by BFS over Hom(G, H) with the exponential
/// edge predicate and neighbours visited in hom order.
std::optional<Homotopy> are_homotopic(const VertexMap& f, const VertexMap& g);

/// f and g differ at exactly one vertex `at`, with before(at) ~ after(at)
/// required when `at` is looped.
struct SpiderMove {
  Vertex at;
  VertexMap before;
  VertexMap after;
};

std::optional<SpiderMove> is_spider_pair(const VertexMap& f, const VertexMap& g);

/// For exp-adjacent morphisms f ~ g on G with n vertices, the n+1 maps f_k
/// agreeing with f on the first n-k source vertices and with g on the rest.
/// Consecutive entries are equal or a spider pair; f_0 = f, f_n = g.
std::vector<VertexMap> spider_decompose(const VertexMap& f, const VertexMap& g);

/// Drops consecutive duplicates from a spider chain.
std::vector<VertexMap> compact_chain(const std::vector<VertexMap>& chain);

/// a * b; a's last frame must equal b's first.
Homotopy concat_homotopies(const Homotopy& a, const Homotopy& b);

/// Homotopy frames pushed forward along a morphism phi : H -> K.
Homotopy postcompose(const VertexMap& phi, const Homotopy& h);
/// Homotopy frames pulled back along a morphism psi : F -> G.
Homotopy precompose(const Homotopy& h, const VertexMap& psi);

/// alpha : f ≃ f' (G -> H), beta : g ≃ g' (H -> K)  |->  g·alpha * beta·f'.
Homotopy compose_homotopies(const Homotopy& alpha, const Homotopy& beta);
/// The other whiskering order, beta·f * g'·alpha.
Homotopy compose_homotopies_swapped(const Homotopy& alpha, const Homotopy& beta);

struct HomotopyEquivalenceReport {
  Verdict verdict = Verdict::NotFound;
  std::size_t compared_length = 0;  // frame-sequence length where the search ended
  std::uint64_t visited = 0;
  /// Frame-sequence path from the padded `a` to the padded `b` when found.
  std::vector<Homotopy> witness;
};

/// Homotopy rel endpoints between two homotopies with the same end maps.
/// The shorter one is padded with its (looped) final frame; equal-length
/// sequences are then joined by single-frame substitutions that keep every
/// intermediate a homotopy and are exp-adjacent to the replaced frame and its
/// two neighbours. On failure both are padded one more frame, up to
/// `limits.pad_budget` extra frames.
HomotopyEquivalenceReport homotopies_equivalent(const Homotopy& a, const Homotopy& b,
                                                const SearchLimits& limits = {});

}  // namespace ghom
