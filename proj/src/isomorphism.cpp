#include "ghom/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ghom {

namespace {

using Colouring = std::vector<std::uint32_t>;

// One joint refinement round: a vertex's new colour is determined by its old
// colour, its loop bit and the multiset of neighbour colours. The signature
// table is shared so colours are comparable across the two graphs.
std::size_t refine(const Graph& g, const Graph& h, Colouring& cg, Colouring& ch) {
  using Signature = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  std::map<Signature, std::uint32_t> table;
  auto signature = [](const Graph& x, const Colouring& c, Vertex v) {
    std::vector<std::uint32_t> around;
    around.reserve(x.degree(v) + 1);
    for (Vertex u : x.neighbors(v)) around.push_back(c[u]);
    std::sort(around.begin(), around.end());
    around.push_back(x.looped(v) ? 1U : 0U);
    return Signature{c[v], std::move(around)};
  };
  std::vector<Signature> sg, sh;
  sg.reserve(g.order());
  sh.reserve(h.order());
  for (Vertex v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
  for (Vertex v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
  for (const auto& s : sg) table.emplace(s, 0);
  for (const auto& s : sh) table.emplace(s, 0);
  std::uint32_t next = 0;
  for (auto& [sig, id] : table) id = next++;
  for (Vertex v = 0; v < g.order(); ++v) cg[v] = table[sg[v]];
  for (Vertex v = 0; v < h.order(); ++v) ch[v] = table[sh[v]];
  return table.size();
}

std::vector<std::size_t> histogram(const Colouring& c, std::size_t colours) {
  std::vector<std::size_t> hist(colours, 0);
  for (auto x : c) ++hist[x];
  return hist;
}

struct Search {
  const Graph& g;
  const Graph& h;
  const Colouring& cg;
  const Colouring& ch;
  std::vector<Vertex> order;  // g-vertices in assignment order
  std::vector<int> fwd;
  std::vector<bool> used;

  bool consistent(Vertex v, Vertex w) const {
    if (g.looped(v) != h.looped(w)) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (fwd[u] < 0 || u == v) continue;
      if (g.adjacent(v, u) != h.adjacent(w, static_cast<Vertex>(fwd[u]))) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (used[w] || cg[v] != ch[w] || !consistent(v, w)) continue;
      fwd[v] = static_cast<int>(w);
      used[w] = true;
      if (run(depth + 1)) return true;
      fwd[v] = -1;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& forward) {
  if (g.order() != h.order() || forward.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex w : forward) {
    if (w >= h.order() || hit[w]) return false;
    hit[w] = true;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u; v < g.order(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(forward[u], forward[v])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.loop_count() != h.loop_count()) {
    return std::nullopt;
  }
  const std::size_t n = g.order();
  Colouring cg(n, 0), ch(n, 0);
  std::size_t colours = 1;
  for (;;) {
    const std::size_t next = refine(g, h, cg, ch);
    if (histogram(cg, next) != histogram(ch, next)) return std::nullopt;
    if (next == colours) break;
    colours = next;
  }

  Search s{g, h, cg, ch, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  // Smallest colour classes first; ties broken by vertex order.
  auto sizes = histogram(cg, colours);
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), Vertex{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Vertex a, Vertex b) { return sizes[cg[a]] < sizes[cg[b]]; });
  if (!s.run(0)) return std::nullopt;
  std::vector<Vertex> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<Vertex>(s.fwd[v]);
  return out;
}

std::optional<Isomorphism> are_isomorphic(const GraphRef& g, const GraphRef& h) {
  auto fwd = find_isomorphism(*g, *h);
  if (!fwd) return std::nullopt;
  std::vector<Vertex> back(fwd->size());
  for (std::size_t v = 0; v < fwd->size(); ++v) back[(*fwd)[v]] = static_cast<Vertex>(v);
  return Isomorphism{VertexMap(g, h, std::move(*fwd)), VertexMap(h, g, std::move(back))};
}

}  // namespace ghom
