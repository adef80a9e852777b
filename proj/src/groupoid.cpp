#include "ghom/groupoid.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "ghom/homotopy.hpp"

namespace ghom {

namespace {

std::string key_of(const std::vector<Vertex>& s) {
  return std::string(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(Vertex));
}

std::vector<Vertex> from_key(const std::string& k) {
  std::vector<Vertex> s(k.size() / sizeof(Vertex));
  std::memcpy(s.data(), k.data(), k.size());
  return s;
}

void require_walk(const Walk& w, const char* what) {
  if (!w.graph || w.vertices.empty() || !w.valid()) {
    throw Error(ErrorCode::InvalidParameter, std::string(what) + " is not a walk");
  }
}

// Pads a walk by one backtrack at its end: Δ-extension, or (x) -> (x y x).
std::optional<Walk> pad(const Walk& w) {
  if (w.length() > 0) return delta_extend(w);
  auto nb = w.graph->neighbors(w.source());
  if (nb.empty()) return std::nullopt;
  return Walk{w.graph, {w.source(), nb.front(), w.source()}};
}

std::vector<WalkStep> pruning_steps(const Walk& w) {
  std::vector<WalkStep> steps{{WalkStepKind::Start, w}};
  while (auto i = first_prunable(steps.back().walk)) {
    steps.push_back({WalkStepKind::Prune, prune_once(steps.back().walk, *i)});
  }
  return steps;
}

WalkStepKind inverse(WalkStepKind k) {
  switch (k) {
    case WalkStepKind::Prune: return WalkStepKind::Unprune;
    case WalkStepKind::Unprune: return WalkStepKind::Prune;
    default: return k;
  }
}

}  // namespace

Walk Walk::from_names(const GraphRef& g, const std::vector<std::string>& names) {
  Walk w{g, {}};
  for (const auto& n : names) w.vertices.push_back(g->index(n));
  return w;
}

Walk Walk::from_word(const GraphRef& g, std::string_view word) {
  Walk w{g, {}};
  for (char c : word) w.vertices.push_back(g->index(std::string_view(&c, 1)));
  return w;
}

bool Walk::valid() const {
  if (!graph || vertices.empty()) return false;
  for (Vertex v : vertices) {
    if (v >= graph->order()) return false;
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!graph->adjacent(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

bool Walk::looped() const {
  return valid() && std::all_of(vertices.begin(), vertices.end(),
                                [&](Vertex v) { return graph->looped(v); });
}

std::string Walk::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += ' ';
    out += graph->name(vertices[i]);
  }
  return out + ")";
}

std::optional<std::size_t> first_prunable(const Walk& w) {
  for (std::size_t i = 0; i + 2 < w.vertices.size(); ++i) {
    if (w.vertices[i] == w.vertices[i + 2]) return i;
  }
  return std::nullopt;
}

Walk prune_once(const Walk& w, std::size_t i) {
  if (i + 2 >= w.vertices.size() || w.vertices[i] != w.vertices[i + 2]) {
    throw Error(ErrorCode::NotPrunable, "walk " + w.str() + " is not prunable at " +
                                            std::to_string(i));
  }
  Walk out{w.graph, {}};
  out.vertices.reserve(w.vertices.size() - 2);
  out.vertices.insert(out.vertices.end(), w.vertices.begin(), w.vertices.begin() + i);
  out.vertices.insert(out.vertices.end(), w.vertices.begin() + i + 2, w.vertices.end());
  return out;
}

Walk prune_fully(const Walk& w) {
  // Stack form of repeated lowest-index pruning: a prune at i can only
  // create a new prunable index at i-1, so one left-to-right pass suffices.
  Walk out{w.graph, {}};
  out.vertices.reserve(w.vertices.size());
  for (Vertex v : w.vertices) {
    const std::size_t n = out.vertices.size();
    if (n >= 2 && out.vertices[n - 2] == v) {
      out.vertices.pop_back();
    } else {
      out.vertices.push_back(v);
    }
  }
  return out;
}

Walk delta_extend(const Walk& w) {
  if (w.vertices.size() < 2) {
    throw Error(ErrorCode::InvalidParameter, "cannot extend a length-0 walk");
  }
  Walk out = w;
  const std::size_t n = w.length();
  out.vertices.push_back(w.vertices[n - 1]);
  out.vertices.push_back(w.vertices[n]);
  return out;
}

Walk concat(const Walk& a, const Walk& b) {
  if (!same_graph(a.graph, b.graph)) throw Error(ErrorCode::Mismatch, "walks live in different graphs");
  if (a.target() != b.source()) {
    throw Error(ErrorCode::EndpointMismatch, a.str() + " does not end where " + b.str() + " starts");
  }
  Walk out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

Walk reversed(const Walk& w) {
  Walk out = w;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

bool is_valid_step(const Walk& prev, const WalkStep& next) {
  const Walk& w = next.walk;
  if (!w.valid() || !same_graph(prev.graph, w.graph)) return false;
  switch (next.kind) {
    case WalkStepKind::Start:
      return prev == w;
    case WalkStepKind::Prune:
      for (std::size_t i = 0; i + 2 < prev.vertices.size(); ++i) {
        if (prev.vertices[i] == prev.vertices[i + 2] && prune_once(prev, i) == w) return true;
      }
      return false;
    case WalkStepKind::Unprune:
      for (std::size_t i = 0; i + 2 < w.vertices.size(); ++i) {
        if (w.vertices[i] == w.vertices[i + 2] && prune_once(w, i) == prev) return true;
      }
      return false;
    case WalkStepKind::Spider: {
      if (prev.vertices.size() != w.vertices.size() || prev.source() != w.source() ||
          prev.target() != w.target()) {
        return false;
      }
      std::size_t diffs = 0;
      for (std::size_t i = 0; i < w.vertices.size(); ++i) diffs += prev.vertices[i] != w.vertices[i];
      return diffs == 1;
    }
  }
  return false;
}

WalkEquivalenceReport walks_equivalent(const Walk& a, const Walk& b, const SearchLimits& limits) {
  require_walk(a, "first argument");
  require_walk(b, "second argument");
  if (!same_graph(a.graph, b.graph)) throw Error(ErrorCode::Mismatch, "walks live in different graphs");
  if (a.source() != b.source() || a.target() != b.target()) {
    throw Error(ErrorCode::EndpointMismatch, a.str() + " and " + b.str() + " have different endpoints");
  }
  WalkEquivalenceReport report;
  auto side_a = pruning_steps(a);
  auto side_b = pruning_steps(b);
  const Graph& g = *a.graph;

  if ((side_a.back().walk.length() + side_b.back().walk.length()) % 2 != 0) {
    report.verdict = Verdict::NotEquivalent;
    report.compared_length = std::max(side_a.back().walk.length(), side_b.back().walk.length());
    return report;
  }
  auto extend = [](std::vector<WalkStep>& side) {
    auto next = pad(side.back().walk);
    if (!next) return false;
    side.push_back({WalkStepKind::Unprune, std::move(*next)});
    return true;
  };
  while (side_a.back().walk.length() < side_b.back().walk.length()) {
    if (!extend(side_a)) break;
  }
  while (side_b.back().walk.length() < side_a.back().walk.length()) {
    if (!extend(side_b)) break;
  }

  bool exhausted = false;
  for (std::size_t round = 0; round <= limits.pad_budget; ++round) {
    const Walk& from = side_a.back().walk;
    const Walk& to = side_b.back().walk;
    report.compared_length = from.length();
    if (from.length() != to.length()) break;  // an isolated endpoint blocked padding

    const std::string goal = key_of(to.vertices);
    std::unordered_map<std::string, std::string> parent;
    parent.emplace(key_of(from.vertices), std::string());
    std::vector<std::vector<Vertex>> layer{from.vertices};
    bool found = parent.count(goal) > 0;
    const std::size_t n = from.vertices.size();
    while (!found && !layer.empty()) {
      if (limits.cancel && limits.cancel->cancelled()) {
        exhausted = true;
        break;
      }
      std::vector<std::vector<Vertex>> next;
      for (const auto& s : layer) {
        const std::string sk = key_of(s);
        for (std::size_t i = 1; i + 1 < n && !found; ++i) {
          auto left = g.neighbors(s[i - 1]);
          auto right = g.neighbors(s[i + 1]);
          std::vector<Vertex> common;
          std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                                std::back_inserter(common));
          for (Vertex u : common) {
            if (u == s[i]) continue;
            auto t = s;
            t[i] = u;
            std::string tk = key_of(t);
            if (parent.emplace(tk, sk).second) {
              ++report.visited;
              if (tk == goal) {
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
      std::vector<WalkStep> middle;
      for (std::string k = goal; !parent[k].empty(); k = parent[k]) {
        middle.push_back({WalkStepKind::Spider, Walk{a.graph, from_key(k)}});
      }
      std::reverse(middle.begin(), middle.end());
      report.witness = side_a;
      report.witness.insert(report.witness.end(), middle.begin(), middle.end());
      for (std::size_t j = side_b.size() - 1; j > 0; --j) {
        report.witness.push_back({inverse(side_b[j].kind), side_b[j - 1].walk});
      }
      return report;
    }
    if (exhausted) break;
    if (round < limits.pad_budget && !(extend(side_a) && extend(side_b))) break;
  }
  report.verdict = exhausted ? Verdict::BudgetExhausted : Verdict::NotFound;
  return report;
}

GroupoidArrow arrow(const Walk& w) {
  require_walk(w, "arrow representative");
  return GroupoidArrow{prune_fully(w)};
}

GroupoidArrow identity_arrow(const GraphRef& g, Vertex v) {
  if (v >= g->order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  return GroupoidArrow{Walk{g, {v}}};
}

GroupoidArrow compose_arrows(const GroupoidArrow& a, const GroupoidArrow& b) {
  return GroupoidArrow{prune_fully(concat(a.representative, b.representative))};
}

GroupoidArrow invert_arrow(const GroupoidArrow& a) {
  return GroupoidArrow{reversed(a.representative)};
}

bool arrows_equivalent(const GroupoidArrow& a, const GroupoidArrow& b, const SearchLimits& limits) {
  return walks_equivalent(a.representative, b.representative, limits).verdict ==
         Verdict::Equivalent;
}

GroupoidArrow induced_functor(const VertexMap& phi, const GroupoidArrow& a) {
  if (!same_graph(phi.source, a.graph())) {
    throw Error(ErrorCode::Mismatch, "functor source differs from the arrow's graph");
  }
  require_morphism(phi, "functor map");
  Walk image{phi.target, {}};
  for (Vertex v : a.representative.vertices) image.vertices.push_back(phi.image[v]);
  return GroupoidArrow{prune_fully(image)};
}

GroupoidArrow natural_iso_component(const VertexMap& phi, const VertexMap& psi, Vertex v) {
  for (const GraphRef* g : {&phi.source, &phi.target}) {
    const auto iso = isolated_vertices(**g);
    if (!iso.empty()) {
      throw Error(ErrorCode::Precondition,
                  "isolated vertex '" + (*g)->name(iso.front()) + "' is not allowed");
    }
  }
  if (v >= phi.source->order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  const auto h = are_homotopic(phi, psi);
  if (!h) throw Error(ErrorCode::NotHomotopic, "the two morphisms are not homotopic");

  const Graph& source = *phi.source;
  Walk path{phi.target, {phi.image[v]}};
  for (std::size_t k = 0; k + 1 < h->frames.size(); ++k) {
    const auto chain = compact_chain(spider_decompose(h->frame(k), h->frame(k + 1)));
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
      const VertexMap& f = chain[s];
      const VertexMap& f2 = chain[s + 1];
      if (f.image[v] == f2.image[v]) continue;
      const Vertex w = source.neighbors(v).front();
      const Vertex middle = f.image[w];  // equals f(v) when w == v
      path = concat(path, Walk{phi.target, {f.image[v], middle, f2.image[v]}});
    }
  }
  return GroupoidArrow{prune_fully(path)};
}

FundamentalGroupProbe fundamental_group_probe(const GraphRef& g, Vertex base, std::size_t max_len,
                                              const SearchLimits& limits) {
  if (base >= g->order()) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  // Non-prunable closed walks at base, by length, each length in DFS order.
  std::vector<std::vector<Walk>> by_length(max_len + 1);
  std::vector<Vertex> seq{base};
  std::vector<std::size_t> next_choice{0};
  while (!seq.empty()) {
    const std::size_t depth = seq.size() - 1;
    if (next_choice.back() == 0 && seq.back() == base) {
      by_length[depth].push_back(Walk{g, seq});
    }
    auto nb = g->neighbors(seq.back());
    bool advanced = false;
    while (depth < max_len && next_choice.back() < nb.size()) {
      const Vertex u = nb[next_choice.back()++];
      if (seq.size() >= 2 && seq[seq.size() - 2] == u) continue;
      seq.push_back(u);
      next_choice.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      seq.pop_back();
      next_choice.pop_back();
    }
  }

  FundamentalGroupProbe probe;
  std::size_t last_new_length = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Walk& w : by_length[len]) {
      ++probe.walks_examined;
      bool joined = false;
      for (const auto& rep : probe.classes) {
        const auto r = walks_equivalent(w, rep.representative, limits);
        if (r.verdict == Verdict::Equivalent) {
          joined = true;
          break;
        }
        if (r.verdict != Verdict::NotEquivalent) ++probe.uncertified_splits;
      }
      if (!joined) {
        probe.classes.push_back(GroupoidArrow{w});
        last_new_length = len;
      }
    }
  }
  probe.saturated = max_len < 2 ? false : last_new_length + 2 <= max_len;
  return probe;
}

}  // namespace ghom
