#include "ghom/homotopy.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace ghom {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not-equivalent";
    case Verdict::NotFound: return "not-found-within-budget";
    case Verdict::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

void check_same_hom_space(const GraphRef& s1, const GraphRef& t1, const GraphRef& s2,
                          const GraphRef& t2) {
  if (!same_graph(s1, s2) || !same_graph(t1, t2)) {
    throw Error(ErrorCode::Mismatch, "maps do not share source and target graphs");
  }
}

// Hom-set with its exp-adjacency, as sorted lists.
struct HomAdjacency {
  HomSet homs;
  std::vector<std::vector<std::uint32_t>> adj;

  HomAdjacency(GraphRef g, GraphRef h) : homs(std::move(g), std::move(h)) {
    adj.resize(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
      for (std::size_t j : homs.neighbors(i)) adj[i].push_back(static_cast<std::uint32_t>(j));
      std::sort(adj[i].begin(), adj[i].end());
    }
  }

  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    return std::binary_search(adj[i].begin(), adj[i].end(), j);
  }

  std::uint32_t index_of(const Assignment& f) const {
    auto i = homs.find(f);
    if (!i) throw Error(ErrorCode::NotMorphism, "frame is not a graph morphism");
    return static_cast<std::uint32_t>(*i);
  }
};

std::string key_of(const std::vector<std::uint32_t>& s) {
  return std::string(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(std::uint32_t));
}

}  // namespace

bool Homotopy::valid() const {
  if (frames.empty()) return false;
  for (const auto& f : frames) {
    if (f.size() != source->order() || !is_morphism(*source, *target, f)) return false;
  }
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    if (!exp_edge(*source, *target, frames[i], frames[i + 1])) return false;
  }
  return true;
}

Homotopy Homotopy::constant(const VertexMap& f) {
  require_morphism(f, "constant homotopy frame");
  return Homotopy{f.source, f.target, {f.image}};
}

Homotopy Homotopy::from_maps(const std::vector<VertexMap>& maps) {
  if (maps.empty()) throw Error(ErrorCode::InvalidParameter, "homotopy needs at least one frame");
  Homotopy h{maps.front().source, maps.front().target, {}};
  for (const auto& m : maps) {
    check_same_hom_space(h.source, h.target, m.source, m.target);
    require_morphism(m, "homotopy frame");
    if (!h.frames.empty() && !exp_edge(*h.source, *h.target, h.frames.back(), m.image)) {
      throw Error(ErrorCode::NotAdjacent, "consecutive homotopy frames are not exp-adjacent");
    }
    h.frames.push_back(m.image);
  }
  return h;
}

std::optional<Homotopy> are_homotopic(const VertexMap& f, const VertexMap& g) {
  check_same_hom_space(f.source, f.target, g.source, g.target);
  require_morphism(f, "first map");
  require_morphism(g, "second map");
  HomSet homs(f.source, f.target);
  const std::size_t start = *homs.find(f.image);
  const std::size_t goal = *homs.find(g.image);
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(homs.size(), kNone);
  parent[start] = start;
  std::deque<std::size_t> queue{start};
  while (!queue.empty() && parent[goal] == kNone) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : homs.neighbors(i)) {
      if (parent[j] == kNone) {
        parent[j] = i;
        queue.push_back(j);
      }
    }
  }
  if (parent[goal] == kNone) return std::nullopt;
  std::vector<Assignment> frames;
  for (std::size_t i = goal;; i = parent[i]) {
    frames.push_back(homs[i]);
    if (i == start) break;
  }
  std::reverse(frames.begin(), frames.end());
  return Homotopy{f.source, f.target, std::move(frames)};
}

std::optional<SpiderMove> is_spider_pair(const VertexMap& f, const VertexMap& g) {
  check_same_hom_space(f.source, f.target, g.source, g.target);
  std::optional<Vertex> at;
  for (Vertex v = 0; v < f.image.size(); ++v) {
    if (f.image[v] == g.image[v]) continue;
    if (at) return std::nullopt;
    at = v;
  }
  if (!at) return std::nullopt;
  if (f.source->looped(*at) && !f.target->adjacent(f.image[*at], g.image[*at])) {
    return std::nullopt;
  }
  return SpiderMove{*at, f, g};
}

std::vector<VertexMap> spider_decompose(const VertexMap& f, const VertexMap& g) {
  check_same_hom_space(f.source, f.target, g.source, g.target);
  require_morphism(f, "first map");
  require_morphism(g, "second map");
  if (!exp_edge(f, g)) {
    throw Error(ErrorCode::NotAdjacent, "spider decomposition needs exp-adjacent maps");
  }
  const std::size_t n = f.image.size();
  std::vector<VertexMap> chain;
  chain.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Assignment fk(n);
    for (std::size_t i = 0; i < n; ++i) fk[i] = i < n - k ? f.image[i] : g.image[i];
    chain.emplace_back(f.source, f.target, std::move(fk));
  }
  return chain;
}

std::vector<VertexMap> compact_chain(const std::vector<VertexMap>& chain) {
  std::vector<VertexMap> out;
  for (const auto& m : chain) {
    if (out.empty() || out.back().image != m.image) out.push_back(m);
  }
  return out;
}

Homotopy concat_homotopies(const Homotopy& a, const Homotopy& b) {
  check_same_hom_space(a.source, a.target, b.source, b.target);
  if (a.frames.back() != b.frames.front()) {
    throw Error(ErrorCode::EndpointMismatch, "first homotopy does not end where the second starts");
  }
  Homotopy out = a;
  out.frames.insert(out.frames.end(), b.frames.begin() + 1, b.frames.end());
  return out;
}

Homotopy postcompose(const VertexMap& phi, const Homotopy& h) {
  if (!same_graph(phi.source, h.target)) {
    throw Error(ErrorCode::Mismatch, "postcompose: morphism source differs from homotopy target");
  }
  require_morphism(phi, "postcomposition map");
  Homotopy out{h.source, phi.target, {}};
  for (const auto& f : h.frames) {
    Assignment img(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) img[i] = phi.image[f[i]];
    out.frames.push_back(std::move(img));
  }
  return out;
}

Homotopy precompose(const Homotopy& h, const VertexMap& psi) {
  if (!same_graph(psi.target, h.source)) {
    throw Error(ErrorCode::Mismatch, "precompose: morphism target differs from homotopy source");
  }
  require_morphism(psi, "precomposition map");
  Homotopy out{psi.source, h.target, {}};
  for (const auto& f : h.frames) {
    Assignment img(psi.image.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = f[psi.image[i]];
    out.frames.push_back(std::move(img));
  }
  return out;
}

Homotopy compose_homotopies(const Homotopy& alpha, const Homotopy& beta) {
  if (!same_graph(alpha.target, beta.source)) {
    throw Error(ErrorCode::Mismatch, "compose: alpha's target is not beta's source");
  }
  return concat_homotopies(postcompose(beta.front(), alpha), precompose(beta, alpha.back()));
}

Homotopy compose_homotopies_swapped(const Homotopy& alpha, const Homotopy& beta) {
  if (!same_graph(alpha.target, beta.source)) {
    throw Error(ErrorCode::Mismatch, "compose: alpha's target is not beta's source");
  }
  return concat_homotopies(precompose(beta, alpha.front()), postcompose(beta.back(), alpha));
}

HomotopyEquivalenceReport homotopies_equivalent(const Homotopy& a, const Homotopy& b,
                                                const SearchLimits& limits) {
  check_same_hom_space(a.source, a.target, b.source, b.target);
  if (a.frames.front() != b.frames.front() || a.frames.back() != b.frames.back()) {
    throw Error(ErrorCode::EndpointMismatch, "homotopies do not share their end maps");
  }
  HomAdjacency space(a.source, a.target);
  auto encode = [&](const Homotopy& h) {
    std::vector<std::uint32_t> s;
    for (const auto& f : h.frames) s.push_back(space.index_of(f));
    return s;
  };
  const auto sa = encode(a);
  const auto sb = encode(b);

  HomotopyEquivalenceReport report;
  const std::size_t base_len = std::max(sa.size(), sb.size());
  bool exhausted = false;
  for (std::size_t extra = 0; extra <= limits.pad_budget; ++extra) {
    const std::size_t len = base_len + extra;
    auto start = sa;
    auto goal = sb;
    start.resize(len, sa.back());
    goal.resize(len, sb.back());
    report.compared_length = len - 1;

    std::unordered_map<std::string, std::string> parent;
    const std::string goal_key = key_of(goal);
    parent.emplace(key_of(start), std::string());
    std::vector<std::vector<std::uint32_t>> layer{start};
    bool found = parent.count(goal_key) > 0;
    while (!found && !layer.empty()) {
      if (limits.cancel && limits.cancel->cancelled()) {
        exhausted = true;
        break;
      }
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& s : layer) {
        const std::string sk = key_of(s);
        for (std::size_t i = 1; i + 1 < len && !found; ++i) {
          for (std::uint32_t h : space.adj[s[i]]) {
            if (h == s[i] || !space.adjacent(h, s[i - 1]) || !space.adjacent(h, s[i + 1])) {
              continue;
            }
            auto t = s;
            t[i] = h;
            std::string tk = key_of(t);
            if (parent.emplace(tk, sk).second) {
              ++report.visited;
              if (tk == goal_key) {
                found = true;
                break;
              }
              next.push_back(std::move(t));
            }
          }
        }
        if (found) break;
        if (report.visited > limits.state_cap) {
          exhausted = true;
          break;
        }
      }
      if (exhausted) break;
      layer = std::move(next);
    }
    if (found) {
      report.verdict = Verdict::Equivalent;
      std::vector<Homotopy> path;
      for (std::string k = goal_key; !k.empty(); k = parent[k]) {
        Homotopy h{a.source, a.target, {}};
        std::vector<std::uint32_t> idx(len);
        std::memcpy(idx.data(), k.data(), len * sizeof(std::uint32_t));
        for (std::uint32_t i : idx) h.frames.push_back(space.homs[i]);
        path.push_back(std::move(h));
      }
      std::reverse(path.begin(), path.end());
      report.witness = std::move(path);
      return report;
    }
    if (exhausted) break;
  }
  report.verdict = exhausted ? Verdict::BudgetExhausted : Verdict::NotFound;
  return report;
}

}  // namespace ghom
