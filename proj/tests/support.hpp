#pragma once

// Fixtures from the worked examples, plus brute-force oracles that only use
// Graph::order/adjacent and never call the algorithms under test.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ghom/graph.hpp"

namespace fx {

using ghom::Graph;
using ghom::GraphRef;
using ghom::Vertex;

inline GraphRef named(std::vector<std::string> names,
                      std::vector<std::pair<std::string, std::string>> edges) {
  return ghom::share(Graph::from_names(names, edges));
}

// Looped 0 adjacent to unlooped 1.
inline GraphRef ex25_g() { return named({"0", "1"}, {{"0", "0"}, {"0", "1"}}); }
// a(looped) - b - c(looped).
inline GraphRef ex25_h() {
  return named({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "c"}});
}
// Two adjacent looped vertices.
inline GraphRef ex23_g() { return named({"0", "1"}, {{"0", "0"}, {"1", "1"}, {"0", "1"}}); }
inline GraphRef k2_ab() { return named({"a", "b"}, {{"a", "b"}}); }
// P_2 = a - b - c.
inline GraphRef p2() { return named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
// C_4 on 0..3.
inline GraphRef c4() { return ghom::share(ghom::cycle_graph(4)); }
// 4-cycle bottom-right-top-left with a pendant on top.
inline GraphRef pendant_square() {
  return named({"b", "r", "t", "l", "p"},
               {{"b", "r"}, {"r", "t"}, {"t", "l"}, {"l", "b"}, {"t", "p"}});
}
// Square a-c-e-d with pendant b on c.
inline GraphRef walk_example() {
  return named({"a", "b", "c", "d", "e"},
               {{"d", "a"}, {"a", "c"}, {"c", "e"}, {"e", "d"}, {"c", "b"}});
}

}  // namespace fx

namespace oracle {

using ghom::Graph;
using ghom::Vertex;
using Map = std::vector<Vertex>;

inline bool is_hom(const Graph& g, const Graph& h, const Map& f) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) && !h.adjacent(f[u], f[v])) return false;
  return true;
}

inline bool exp_adj(const Graph& g, const Graph& h, const Map& f, const Map& k) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) && !h.adjacent(f[u], k[v])) return false;
  return true;
}

// All |H|^|G| set maps, first source vertex most significant.
inline std::vector<Map> all_maps(std::size_t n, std::size_t m) {
  std::vector<Map> out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Map f(n, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = n;
    while (i > 0 && f[i - 1] + 1 == m) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

inline std::vector<Map> homs(const Graph& g, const Graph& h) {
  std::vector<Map> out;
  for (auto& f : all_maps(g.order(), h.order()))
    if (is_hom(g, h, f)) out.push_back(f);
  return out;
}

inline bool is_iso_perm(const Graph& g, const Graph& h, const Map& p) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) return false;
  return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  Map p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_iso_perm(g, h, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Lexicographically least adjacency bit string over all relabellings.
inline std::string canonical(const Graph& g) {
  const std::size_t n = g.order();
  Map p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s(n * n, '0');
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (g.adjacent(p[u], p[v])) s[u * n + v] = '1';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Union-find component labels over `n` nodes joined by `adj`.
inline std::vector<std::size_t> components(std::size_t n,
                                           const std::function<bool(std::size_t, std::size_t)>& adj) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj(i, j)) parent[root(i)] = root(j);
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = root(i);
  return out;
}

// Every walk reachable by any sequence of prunes that cannot be pruned further.
inline std::set<Map> pruned_forms(const Map& w) {
  std::set<Map> out, seen;
  std::function<void(const Map&)> go = [&](const Map& x) {
    if (!seen.insert(x).second) return;
    bool any = false;
    for (std::size_t i = 0; i + 2 < x.size(); ++i) {
      if (x[i] != x[i + 2]) continue;
      any = true;
      Map y;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i && j != i + 1) y.push_back(x[j]);
      go(y);
    }
    if (!any) out.insert(x);
  };
  go(w);
  return out;
}

// All walks of length <= max_len (as vertex lists) in g.
inline std::vector<Map> walks(const Graph& g, std::size_t max_len) {
  std::vector<Map> out;
  std::function<void(Map&)> go = [&](Map& w) {
    out.push_back(w);
    if (w.size() > max_len) return;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!g.adjacent(w.back(), u)) continue;
      w.push_back(u);
      go(w);
      w.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    Map w{v};
    go(w);
  }
  return out;
}

// Is `b` one interior single-vertex substitution away from `a` (same length,
// endpoints fixed, still a walk)?
inline bool spider_step(const Graph& g, const Map& a, const Map& b) {
  if (a.size() != b.size() || a.front() != b.front() || a.back() != b.back()) return false;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  if (diff != 1) return false;
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (!g.adjacent(b[i], b[i + 1])) return false;
  return true;
}

// Is `b` obtained from `a` by deleting a backtrack pair?
inline bool prune_step(const Map& a, const Map& b) {
  if (a.size() != b.size() + 2) return false;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    if (a[i] != a[i + 2]) continue;
    Map y;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i && j != i + 1) y.push_back(a[j]);
    if (y == b) return true;
  }
  return false;
}

}  // namespace oracle
