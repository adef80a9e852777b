#include "ghom/exponential.hpp"

#include <algorithm>
#include <limits>

namespace ghom {

namespace {

std::string key_of(std::span<const Vertex> f) {
  return std::string(reinterpret_cast<const char*>(f.data()), f.size() * sizeof(Vertex));
}

void check_pair(const VertexMap& f, const VertexMap& g) {
  if (!same_graph(f.source, g.source) || !same_graph(f.target, g.target)) {
    throw Error(ErrorCode::Mismatch, "maps do not share source and target graphs");
  }
}

// Candidate images of each source vertex for an exp-neighbour of f.
std::vector<std::vector<Vertex>> neighbour_domains(const Graph& exponent, const Graph& base,
                                                   std::span<const Vertex> f) {
  std::vector<std::vector<Vertex>> dom(exponent.order());
  std::vector<Vertex> all(base.order());
  for (Vertex w = 0; w < base.order(); ++w) all[w] = w;
  for (Vertex v = 0; v < exponent.order(); ++v) {
    auto nv = exponent.neighbors(v);
    if (nv.empty()) {
      dom[v] = all;
      continue;
    }
    auto first = base.neighbors(f[nv[0]]);
    std::vector<Vertex> cur(first.begin(), first.end());
    for (std::size_t i = 1; i < nv.size() && !cur.empty(); ++i) {
      auto nb = base.neighbors(f[nv[i]]);
      std::vector<Vertex> next;
      std::set_intersection(cur.begin(), cur.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      cur.swap(next);
    }
    dom[v] = std::move(cur);
  }
  return dom;
}

}  // namespace

bool exp_edge(const Graph& exponent, const Graph& base, std::span<const Vertex> f,
              std::span<const Vertex> g) {
  for (Vertex u = 0; u < exponent.order(); ++u) {
    for (Vertex v : exponent.neighbors(u)) {
      if (!base.adjacent(f[u], g[v])) return false;
    }
  }
  return true;
}

bool exp_edge(const VertexMap& f, const VertexMap& g) {
  check_pair(f, g);
  return exp_edge(*f.source, *f.target, f.image, g.image);
}

void for_each_exp_neighbor(const Graph& exponent, const Graph& base, std::span<const Vertex> f,
                           const std::function<void(const Assignment&)>& visit) {
  const auto dom = neighbour_domains(exponent, base, f);
  const std::size_t n = exponent.order();
  for (const auto& d : dom) {
    if (d.empty()) return;
  }
  // Odometer over the product of domains.
  std::vector<std::size_t> pos(n, 0);
  Assignment g(n);
  for (std::size_t v = 0; v < n; ++v) g[v] = dom[v][0];
  for (;;) {
    visit(g);
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++pos[v] < dom[v].size()) {
        g[v] = dom[v][pos[v]];
        break;
      }
      pos[v] = 0;
      g[v] = dom[v][0];
      if (v == 0) return;
    }
    if (n == 0) return;
  }
}

std::uint64_t ExponentialGraph::vertex_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < exponent->order(); ++i) {
    if (base->order() != 0 &&
        count > std::numeric_limits<std::uint64_t>::max() / base->order()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= base->order();
  }
  return count;
}

std::uint64_t ExponentialGraph::rank(std::span<const Vertex> f) const {
  std::uint64_t r = 0;
  for (Vertex w : f) r = r * base->order() + w;
  return r;
}

Assignment ExponentialGraph::unrank(std::uint64_t r) const {
  Assignment f(exponent->order());
  for (std::size_t i = f.size(); i > 0; --i) {
    f[i - 1] = static_cast<Vertex>(r % base->order());
    r /= base->order();
  }
  return f;
}

ExponentialGraph realize_exponential(const GraphRef& g, const GraphRef& h, std::uint64_t cap) {
  ExponentialGraph e{g, h, std::nullopt};
  const std::uint64_t count = e.vertex_count();
  if (count > cap) {
    throw Error(ErrorCode::TooLarge,
                "exponential has " +
                    (count == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                         : std::to_string(count)) +
                    " vertices; a cap of at least that is required (current cap " +
                    std::to_string(cap) + ")");
  }
  std::vector<std::string> names;
  names.reserve(count);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint64_t r = 0; r < count; ++r) {
    Assignment f = e.unrank(r);
    names.push_back(VertexMap(g, h, f).word());
    for_each_exp_neighbor(*g, *h, f, [&](const Assignment& other) {
      const std::uint64_t s = e.rank(other);
      if (s >= r) edges.emplace_back(static_cast<Vertex>(r), static_cast<Vertex>(s));
    });
  }
  e.realized = Graph::from_indices(std::move(names), edges);
  return e;
}

std::vector<Assignment> enumerate_hom_assignments(const Graph& g, const Graph& h) {
  std::vector<Assignment> out;
  const std::size_t n = g.order();
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (h.order() == 0) return out;
  Assignment f(n, 0);
  // Candidate lists per depth, recomputed as the search descends.
  std::vector<std::vector<Vertex>> cand(n);
  auto candidates = [&](Vertex v) {
    std::vector<Vertex> cur;
    bool constrained = false;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) break;
      if (u == v) continue;
      auto nb = h.neighbors(f[u]);
      if (!constrained) {
        cur.assign(nb.begin(), nb.end());
        constrained = true;
      } else {
        std::vector<Vertex> next;
        std::set_intersection(cur.begin(), cur.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        cur.swap(next);
      }
    }
    if (!constrained) {
      cur.resize(h.order());
      for (Vertex w = 0; w < h.order(); ++w) cur[w] = w;
    }
    if (g.looped(v)) {
      std::erase_if(cur, [&](Vertex w) { return !h.looped(w); });
    }
    return cur;
  };
  std::vector<std::size_t> pos(n, 0);
  std::size_t depth = 0;
  cand[0] = candidates(0);
  for (;;) {
    if (pos[depth] < cand[depth].size()) {
      f[depth] = cand[depth][pos[depth]++];
      if (depth + 1 == n) {
        out.push_back(f);
      } else {
        ++depth;
        cand[depth] = candidates(static_cast<Vertex>(depth));
        pos[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
  return out;
}

std::vector<VertexMap> enumerate_homs(const GraphRef& g, const GraphRef& h) {
  std::vector<VertexMap> out;
  for (auto& f : enumerate_hom_assignments(*g, *h)) out.emplace_back(g, h, std::move(f));
  return out;
}

HomSet::HomSet(GraphRef source, GraphRef target)
    : source_(std::move(source)), target_(std::move(target)),
      maps_(enumerate_hom_assignments(*source_, *target_)) {
  index_.reserve(maps_.size());
  for (std::size_t i = 0; i < maps_.size(); ++i) index_.emplace(key_of(maps_[i]), i);
}

std::optional<std::size_t> HomSet::find(std::span<const Vertex> f) const {
  auto it = index_.find(key_of(f));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> HomSet::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for_each_exp_neighbor(*source_, *target_, maps_[i], [&](const Assignment& g) {
    if (auto j = find(g)) out.push_back(*j);
  });
  return out;
}

Graph hom_graph(const GraphRef& g, const GraphRef& h) {
  HomSet homs(g, h);
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    names.push_back(homs.map(i).word());
    for (std::size_t j : homs.neighbors(i)) {
      if (j >= i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_indices(std::move(names), edges);
}

std::vector<std::size_t> hom_components(const HomSet& homs) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(homs.size(), kUnset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < homs.size(); ++s) {
    if (comp[s] != kUnset) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j : homs.neighbors(i)) {
        if (comp[j] == kUnset) {
          comp[j] = next;
          stack.push_back(j);
        }
      }
    }
    ++next;
  }
  return comp;
}

VertexMap postcompose(const VertexMap& phi, const VertexMap& f) {
  require_morphism(phi, "postcomposition map");
  return compose(phi, f);
}

VertexMap precompose(const VertexMap& psi, const VertexMap& f) {
  require_morphism(psi, "precomposition map");
  return compose(f, psi);
}

bool CurriedMap::is_morphism() const {
  for (auto [u, v] : g->edges()) {
    if (!exp_edge(*h, *k, rows[u], rows[v])) return false;
  }
  return true;
}

VertexMap CurriedMap::into(const GraphRef& realized_exponential,
                           const ExponentialGraph& kh) const {
  std::vector<Vertex> img;
  img.reserve(rows.size());
  for (const auto& row : rows) img.push_back(static_cast<Vertex>(kh.rank(row)));
  return VertexMap(g, realized_exponential, std::move(img));
}

CurriedMap curry(const VertexMap& f, const GraphRef& g, const GraphRef& h) {
  if (f.source->order() != g->order() * h->order()) {
    throw Error(ErrorCode::Mismatch, "curry: source is not G x H");
  }
  require_morphism(f, "curried map");
  CurriedMap c{g, h, f.target, {}};
  c.rows.resize(g->order());
  for (Vertex v = 0; v < g->order(); ++v) {
    c.rows[v].resize(h->order());
    for (Vertex w = 0; w < h->order(); ++w) c.rows[v][w] = f.image[product_index(*h, v, w)];
  }
  return c;
}

VertexMap uncurry(const CurriedMap& c, const GraphRef& gxh) {
  if (gxh->order() != c.g->order() * c.h->order()) {
    throw Error(ErrorCode::Mismatch, "uncurry: product graph has the wrong order");
  }
  std::vector<Vertex> img(gxh->order());
  for (Vertex v = 0; v < c.g->order(); ++v) {
    for (Vertex w = 0; w < c.h->order(); ++w) img[product_index(*c.h, v, w)] = c.rows[v][w];
  }
  return VertexMap(gxh, c.k, std::move(img));
}

}  // namespace ghom
