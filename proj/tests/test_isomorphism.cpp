#include <gtest/gtest.h>

#include <random>

#include "ghom/enumerate.hpp"
#include "ghom/isomorphism.hpp"
#include "support.hpp"

using namespace ghom;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm, const std::string& prefix) {
  std::vector<std::string> names(g.order());
  for (Vertex v = 0; v < g.order(); ++v) names[perm[v]] = prefix + g.name(v);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_indices(names, edges);
}

void expect_agrees(const Graph& g, const Graph& h, bool want) {
  const auto iso = find_isomorphism(g, h);
  ASSERT_EQ(iso.has_value(), want);
  if (iso) ASSERT_TRUE(oracle::is_iso_perm(g, h, *iso));
}

}  // namespace

TEST(Isomorphism, ShuffledC5) {
  const auto c5 = share(cycle_graph(5));
  const auto shuffled = share(relabel(*c5, {3, 0, 4, 1, 2}, "x"));
  const auto iso = are_isomorphic(c5, shuffled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_morphism(iso->forward));
  EXPECT_TRUE(is_morphism(iso->backward));
  EXPECT_EQ(compose(iso->backward, iso->forward), identity_map(c5));
  EXPECT_EQ(compose(iso->forward, iso->backward), identity_map(shuffled));
}

TEST(Isomorphism, C5IsNotP4) {
  EXPECT_FALSE(are_isomorphic(share(cycle_graph(5)), share(path_graph(4))).has_value());
}

TEST(Isomorphism, LoopsMustMatch) {
  const Graph a = Graph::from_names({"x", "y"}, {{"x", "y"}, {"x", "x"}});
  const Graph b = Graph::from_names({"x", "y"}, {{"x", "y"}, {"y", "y"}});
  const Graph c = Graph::from_names({"x", "y"}, {{"x", "y"}});
  expect_agrees(a, b, true);
  expect_agrees(a, c, false);
}

TEST(Isomorphism, ExampleProductIsC4) {
  const auto p = share(product(*fx::ex23_g(), *fx::k2_ab()));
  EXPECT_TRUE(are_isomorphic(p, share(cycle_graph(4))).has_value());
}

TEST(Isomorphism, RegularNonIsomorphicPair) {
  // C6 and two triangles: same degree sequence, refinement cannot separate them.
  const Graph two = coproduct(complete_graph(3), complete_graph(3));
  expect_agrees(cycle_graph(6), two, false);
  expect_agrees(cycle_graph(6), relabel(cycle_graph(6), {5, 3, 1, 0, 2, 4}, "q"), true);
}

TEST(Isomorphism, AllPairsUpToFourVerticesMatchBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const GraphFamily fam(n, true);
    std::vector<Graph> gs;
    std::vector<std::string> canon;
    for (std::uint64_t k = 0; k < fam.size(); ++k) {
      gs.push_back(fam.at(k));
      canon.push_back(oracle::canonical(gs.back()));
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = 0; j < gs.size(); ++j) {
        expect_agrees(gs[i], gs[j], canon[i] == canon[j]);
      }
    }
  }
}

TEST(Isomorphism, CanonicalFormAgreesWithPermutationSearch) {
  // Sanity check of the oracle itself on random pairs.
  std::mt19937_64 rng(7);
  const GraphFamily fam(4, true);
  for (int t = 0; t < 2000; ++t) {
    const Graph a = fam.at(rng() % fam.size());
    const Graph b = fam.at(rng() % fam.size());
    ASSERT_EQ(oracle::canonical(a) == oracle::canonical(b), oracle::isomorphic(a, b));
  }
}

TEST(Isomorphism, AllLooplessPairsOnFiveVertices) {
  const GraphFamily fam(5, false);
  std::vector<Graph> gs;
  std::vector<std::string> canon;
  for (std::uint64_t k = 0; k < fam.size(); ++k) {
    gs.push_back(fam.at(k));
    canon.push_back(oracle::canonical(gs.back()));
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      expect_agrees(gs[i], gs[j], canon[i] == canon[j]);
    }
  }
}

TEST(Isomorphism, FiveVerticesWithLoopsAgainstClassRepresentatives) {
  const GraphFamily fam(5, true);
  std::map<std::string, Graph> reps;
  for (std::uint64_t k = 0; k < fam.size(); ++k) {
    Graph g = fam.at(k);
    const std::string c = oracle::canonical(g);
    auto it = reps.find(c);
    if (it == reps.end()) {
      reps.emplace(c, std::move(g));
    } else {
      expect_agrees(g, it->second, true);
    }
  }
  std::vector<const Graph*> rs;
  for (const auto& [c, g] : reps) rs.push_back(&g);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) expect_agrees(*rs[i], *rs[j], i == j);
  }
}
