#include "ghom/fold.hpp"

#include <algorithm>
#include <random>

#include "ghom/isomorphism.hpp"

namespace ghom {

namespace {

std::vector<Vertex> all_but(const Graph& g, Vertex removed) {
  std::vector<Vertex> keep;
  keep.reserve(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != removed) keep.push_back(u);
  }
  return keep;
}

// Maps each vertex of `from` to the vertex of `to` with the same name.
VertexMap by_name(const GraphRef& from, const GraphRef& to) {
  std::vector<Vertex> img;
  img.reserve(from->order());
  for (const auto& n : from->names()) img.push_back(to->index(n));
  return VertexMap(from, to, std::move(img));
}

}  // namespace

std::string Fold::describe() const { return graph->name(removed) + "->" + graph->name(into); }

bool is_valid_fold(const Graph& g, Vertex removed, Vertex into) {
  if (removed == into || removed >= g.order() || into >= g.order()) return false;
  auto nw = g.neighbors(removed);
  auto nv = g.neighbors(into);
  return std::includes(nv.begin(), nv.end(), nw.begin(), nw.end());
}

std::vector<Fold> find_folds(const GraphRef& g) {
  std::vector<Fold> out;
  for (Vertex w = 0; w < g->order(); ++w) {
    for (Vertex v = 0; v < g->order(); ++v) {
      if (is_valid_fold(*g, w, v)) out.push_back(Fold{g, w, v});
    }
  }
  return out;
}

bool is_stiff(const Graph& g) {
  for (Vertex w = 0; w < g.order(); ++w) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (is_valid_fold(g, w, v)) return false;
    }
  }
  return true;
}

Graph apply_fold(const Graph& g, const Fold& f) {
  if (!is_valid_fold(g, f.removed, f.into)) {
    throw Error(ErrorCode::InvalidFold, "neighbourhood of the removed vertex is not contained "
                                        "in that of its target");
  }
  const auto keep = all_but(g, f.removed);
  return induced_subgraph(g, keep);
}

VertexMap fold_endomorphism(const Fold& f) {
  VertexMap m = identity_map(f.graph);
  m.image[f.removed] = f.into;
  return m;
}

PleatResult pleat(const GraphRef& g, FoldPolicy policy, std::uint64_t seed) {
  if (g->empty()) throw Error(ErrorCode::EmptyGraph, "the pleat of an empty graph is undefined");
  std::mt19937_64 rng(seed);
  PleatResult result{g, g, {}, identity_map(g), identity_map(g)};
  // retraction[i] = name of the current image of original vertex i
  std::vector<std::string> image = g->names();
  GraphRef cur = g;

  auto step = [&](const Fold& f) {
    result.fold_sequence.push_back(f);
    const std::string& gone = cur->name(f.removed);
    const std::string& onto = cur->name(f.into);
    for (auto& n : image) {
      if (n == gone) n = onto;
    }
    cur = share(apply_fold(*cur, f));
  };

  for (;;) {
    const auto isolated = isolated_vertices(*cur);
    if (isolated.empty() || cur->order() == 1) break;
    const Vertex w = isolated.front();
    std::optional<Vertex> target;
    for (Vertex v = 0; v < cur->order() && !target; ++v) {
      if (v != w && cur->degree(v) > 0) target = v;
    }
    if (!target) target = (w == 0) ? 1 : 0;
    step(Fold{cur, w, *target});
  }
  for (;;) {
    const auto folds = find_folds(cur);
    if (folds.empty()) break;
    std::size_t pick = 0;
    if (policy == FoldPolicy::SeededRandom) {
      pick = std::uniform_int_distribution<std::size_t>(0, folds.size() - 1)(rng);
    }
    step(folds[pick]);
  }

  result.pleat = cur;
  std::vector<Vertex> img;
  img.reserve(image.size());
  for (const auto& n : image) img.push_back(cur->index(n));
  result.embedding = VertexMap(g, cur, std::move(img));
  result.inclusion = by_name(cur, g);
  return result;
}

HomotopyEquivalence homotopy_equivalent(const GraphRef& g, const GraphRef& h) {
  if (g->empty() || h->empty()) {
    throw Error(ErrorCode::EmptyGraph, "homotopy equivalence needs nonempty graphs");
  }
  const PleatResult pg = pleat(g);
  const PleatResult ph = pleat(h);
  HomotopyEquivalence out;
  auto iso = are_isomorphic(pg.pleat, ph.pleat);
  if (!iso) return out;
  out.equivalent = true;
  out.forward = compose(ph.inclusion, compose(iso->forward, pg.embedding));
  out.backward = compose(pg.inclusion, compose(iso->backward, ph.embedding));
  return out;
}

VertexDuplication duplicate_vertex(const GraphRef& g, Vertex v) {
  if (v >= g->order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::string twin_name = g->name(v) + "*";
  while (g->find(twin_name)) twin_name += "*";
  std::vector<std::string> names = g->names();
  names.push_back(twin_name);
  const auto twin = static_cast<Vertex>(g->order());
  auto edges = g->edges();
  for (Vertex u : g->neighbors(v)) edges.emplace_back(twin, u == v ? twin : u);
  if (g->looped(v)) edges.emplace_back(twin, v);
  GraphRef hat = share(Graph::from_indices(std::move(names), edges));

  std::vector<Vertex> id(g->order());
  for (Vertex u = 0; u < g->order(); ++u) id[u] = u;
  std::vector<Vertex> moved = id;
  moved[v] = twin;
  std::vector<Vertex> back = id;
  back.push_back(v);
  return VertexDuplication{hat, twin, VertexMap(g, hat, id), VertexMap(g, hat, moved),
                           VertexMap(hat, g, back)};
}

bool pleat_product_check(const GraphRef& g, const GraphRef& h) {
  for (const GraphRef* x : {&g, &h}) {
    const auto iso = isolated_vertices(**x);
    if (!iso.empty()) {
      throw Error(ErrorCode::Precondition,
                  "isolated vertex '" + (*x)->name(iso.front()) + "' is not allowed");
    }
  }
  if (g->empty() || h->empty()) {
    throw Error(ErrorCode::EmptyGraph, "pleat product check needs nonempty graphs");
  }
  const GraphRef lhs = pleat(share(product(*g, *h))).pleat;
  const GraphRef rhs = share(product(*pleat(g).pleat, *pleat(h).pleat));
  return are_isomorphic(lhs, rhs).has_value();
}

std::vector<Fold> lift_fold_to_product(const Graph& g, const Graph& h, const Fold& f) {
  if (!is_valid_fold(g, f.removed, f.into)) {
    throw Error(ErrorCode::InvalidFold, "not a fold of the first factor");
  }
  std::vector<Fold> out;
  GraphRef cur = share(product(g, h));
  for (Vertex w = 0; w < h.order(); ++w) {
    const std::string gone = "(" + g.name(f.removed) + "," + h.name(w) + ")";
    const std::string onto = "(" + g.name(f.into) + "," + h.name(w) + ")";
    Fold step{cur, cur->index(gone), cur->index(onto)};
    out.push_back(step);
    cur = share(apply_fold(*cur, step));
  }
  return out;
}

}  // namespace ghom
