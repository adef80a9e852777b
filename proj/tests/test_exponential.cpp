#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ghom/enumerate.hpp"
#include "ghom/exponential.hpp"
#include "ghom/isomorphism.hpp"
#include "support.hpp"

using namespace ghom;

namespace {

std::set<std::string> words(const std::vector<VertexMap>& maps) {
  std::set<std::string> out;
  for (const auto& m : maps) out.insert(m.word());
  return out;
}

std::vector<GraphRef> shared_graphs(std::size_t max_vertices) {
  std::vector<GraphRef> out;
  for (auto& g : all_graphs(max_vertices, true)) out.push_back(share(std::move(g)));
  return out;
}

}  // namespace

TEST(ExpEdge, SpiderPairFromExample) {
  const auto g = fx::ex25_g(), h = fx::ex25_h();
  EXPECT_TRUE(exp_edge(VertexMap::from_word(g, h, "ab"), VertexMap::from_word(g, h, "aa")));
}

TEST(ExpEdge, IdentityIsLooped) {
  const auto k2 = share(complete_graph(2));
  EXPECT_TRUE(exp_edge(identity_map(k2), identity_map(k2)));
}

TEST(ExpEdge, CycleToPathPair) {
  const auto c = fx::c4(), p = fx::p2();
  EXPECT_TRUE(exp_edge(VertexMap::from_word(c, p, "babc"), VertexMap::from_word(c, p, "bcba")));
}

TEST(ExpEdge, MismatchedGraphsThrow) {
  const auto c = fx::c4(), p = fx::p2();
  try {
    exp_edge(VertexMap::from_word(c, p, "babc"), identity_map(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Mismatch);
  }
}

TEST(ExpEdge, AgreesWithDefinitionAndIsSymmetric) {
  const auto graphs = all_graphs(3, true);
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      const auto maps = oracle::all_maps(g.order(), h.order());
      for (const auto& f : maps) {
        std::set<oracle::Map> listed;
        for_each_exp_neighbor(g, h, f, [&](const Assignment& a) { listed.insert(a); });
        for (const auto& k : maps) {
          const bool want = oracle::exp_adj(g, h, f, k);
          ASSERT_EQ(exp_edge(g, h, f, k), want);
          ASSERT_EQ(exp_edge(g, h, k, f), want);
          ASSERT_EQ(listed.count(k) == 1, want);
        }
      }
    }
  }
}

TEST(Realize, ExampleHasNineVerticesFourLooped) {
  const auto g = fx::ex25_g(), h = fx::ex25_h();
  const auto ex = realize_exponential(g, h);
  ASSERT_TRUE(ex.realized.has_value());
  EXPECT_EQ(ex.realized->order(), 9U);
  EXPECT_EQ(ex.realized->loop_count(), 4U);
  std::set<std::string> looped;
  for (Vertex v = 0; v < 9; ++v)
    if (ex.realized->looped(v)) looped.insert(ex.realized->name(v));
  EXPECT_EQ(looped, (std::set<std::string>{"aa", "ab", "cb", "cc"}));
  EXPECT_EQ(looped, words(enumerate_homs(g, h)));
  EXPECT_EQ(ex.realized->name(0), "aa");
  EXPECT_EQ(ex.realized->name(8), "cc");
}

TEST(Realize, LoopedVertexBase) {
  const auto ex = realize_exponential(fx::c4(), share(looped_vertex()));
  EXPECT_EQ(ex.realized->order(), 1U);
  EXPECT_TRUE(ex.realized->looped(0));
}

TEST(Realize, EdgelessExponentIsCompleteWithLoops) {
  const auto pt = share(Graph::from_names({"x"}, {}));
  for (const auto& h : {fx::p2(), fx::walk_example(), fx::ex25_h()}) {
    const auto ex = realize_exponential(pt, h);
    ASSERT_EQ(ex.realized->order(), h->order());
    for (Vertex u = 0; u < h->order(); ++u)
      for (Vertex v = 0; v < h->order(); ++v) EXPECT_TRUE(ex.realized->adjacent(u, v));
  }
}

TEST(Realize, CapNamesRequiredSize) {
  try {
    realize_exponential(share(cycle_graph(7)), share(complete_graph(8)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    EXPECT_NE(std::string(e.what()).find("2097152"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(realize_exponential(fx::p2(), fx::p2(), 27));
  EXPECT_THROW(realize_exponential(fx::p2(), fx::p2(), 26), Error);
}

TEST(Realize, RankRoundTrip) {
  const auto ex = realize_exponential(fx::c4(), fx::p2());
  for (std::uint64_t r = 0; r < ex.vertex_count(); ++r) EXPECT_EQ(ex.rank(ex.unrank(r)), r);
}

TEST(Realize, LoopsAreExactlyMorphisms) {
  const auto graphs = shared_graphs(3);
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      const auto ex = realize_exponential(g, h);
      const auto maps = oracle::all_maps(g->order(), h->order());
      ASSERT_EQ(ex.realized->order(), maps.size());
      std::vector<oracle::Map> looped;
      for (Vertex v = 0; v < maps.size(); ++v) {
        ASSERT_EQ(ex.unrank(v), maps[v]);
        ASSERT_EQ(ex.realized->looped(v), oracle::is_hom(*g, *h, maps[v]));
        if (ex.realized->looped(v)) looped.push_back(maps[v]);
      }
      ASSERT_EQ(enumerate_hom_assignments(*g, *h), looped);
    }
  }
}

TEST(Homs, CycleToPathHasTheEightListedMaps) {
  const auto homs = enumerate_homs(fx::c4(), fx::p2());
  EXPECT_EQ(homs.size(), 8U);
  EXPECT_EQ(words(homs), (std::set<std::string>{"babc", "baba", "bcbc", "bcba", "cbab", "abab",
                                                "cbcb", "abcb"}));
}

TEST(Homs, ExampleCountsAgainstBruteForce) {
  EXPECT_EQ(enumerate_homs(fx::ex25_g(), fx::ex25_h()).size(),
            oracle::homs(*fx::ex25_g(), *fx::ex25_h()).size());
  EXPECT_EQ(enumerate_homs(fx::ex25_g(), fx::ex25_h()).size(), 4U);
  EXPECT_EQ(enumerate_homs(share(complete_graph(2)), share(complete_graph(3))).size(), 6U);
}

TEST(Homs, LargerInstancesMatchBruteForce) {
  const std::vector<GraphRef> gs{fx::c4(), fx::pendant_square(), fx::walk_example(),
                                 share(cycle_graph(5)), share(looped_path_graph(2))};
  for (const auto& g : gs) {
    for (const auto& h : gs) {
      if (std::pow(double(h->order()), double(g->order())) > 1e6) continue;
      EXPECT_EQ(enumerate_hom_assignments(*g, *h), oracle::homs(*g, *h));
    }
  }
}

TEST(HomGraph, CycleToPathHasTwoComponentsOfFour) {
  const auto c = fx::c4(), p = fx::p2();
  const Graph hg = hom_graph(c, p);
  ASSERT_EQ(hg.order(), 8U);
  EXPECT_EQ(hg.loop_count(), 8U);
  const auto comp = oracle::components(hg.order(), [&](std::size_t i, std::size_t j) {
    return hg.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
  });
  std::map<std::size_t, std::size_t> sizes;
  for (auto r : comp) ++sizes[r];
  ASSERT_EQ(sizes.size(), 2U);
  for (auto [r, s] : sizes) EXPECT_EQ(s, 4U);

  const HomSet homs(c, p);
  const auto ids = hom_components(homs);
  for (std::size_t i = 0; i < homs.size(); ++i)
    for (std::size_t j = 0; j < homs.size(); ++j) EXPECT_EQ(ids[i] == ids[j], comp[i] == comp[j]);
}

TEST(HomGraph, IntoLoopedVertex) {
  const Graph hg = hom_graph(fx::walk_example(), share(looped_vertex()));
  EXPECT_EQ(hg.order(), 1U);
  EXPECT_TRUE(hg.looped(0));
}

TEST(HomGraph, K2ToK2) {
  const auto k2 = share(complete_graph(2));
  const Graph hg = hom_graph(k2, k2);
  ASSERT_EQ(hg.order(), 2U);
  EXPECT_TRUE(hg.looped(0));
  EXPECT_TRUE(hg.looped(1));
  EXPECT_FALSE(hg.adjacent(0, 1));
}

TEST(Induced, IdentityAndConstant) {
  const auto c = fx::c4(), p = fx::p2();
  const VertexMap f = VertexMap::from_word(c, p, "babc");
  EXPECT_EQ(postcompose(identity_map(p), f), f);
  EXPECT_EQ(precompose(identity_map(c), f), f);
  const auto pt = share(looped_vertex());
  const VertexMap to_pt(p, pt, {0, 0, 0});
  const VertexMap k = postcompose(to_pt, f);
  EXPECT_TRUE(is_morphism(k));
  EXPECT_TRUE(exp_edge(k, k));
}

TEST(Induced, NonMorphismRejected) {
  const auto c = fx::c4(), p = fx::p2();
  const VertexMap bad = VertexMap::from_word(p, p, "aac");
  try {
    postcompose(bad, VertexMap::from_word(c, p, "babc"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMorphism);
  }
  EXPECT_THROW(precompose(VertexMap::from_word(p, c, "0022"), VertexMap::from_word(c, p, "babc")),
               Error);
}

TEST(Induced, InclusionPreservesExampleEdge) {
  const auto g = fx::ex25_g(), h = fx::ex25_h();
  const auto h2 = fx::named({"a", "b", "c", "z"},
                            {{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "c"}, {"z", "b"}});
  const VertexMap inc(h, h2, {0, 1, 2});
  const VertexMap f = VertexMap::from_word(g, h, "ab"), k = VertexMap::from_word(g, h, "aa");
  ASSERT_TRUE(exp_edge(f, k));
  EXPECT_TRUE(exp_edge(postcompose(inc, f), postcompose(inc, k)));
}

// Induced maps preserve exponential edges. Exhaustive when all three graphs
// have at most two vertices; seeded samples at three.
TEST(Induced, PreserveExponentialEdges) {
  auto check = [](const GraphRef& g, const GraphRef& h, const GraphRef& k) {
    const auto maps = oracle::all_maps(g->order(), h->order());
    for (const auto& phi : enumerate_homs(h, k)) {
      for (const auto& f : maps) {
        for (const auto& q : maps) {
          if (!oracle::exp_adj(*g, *h, f, q)) continue;
          ASSERT_TRUE(exp_edge(postcompose(phi, VertexMap(g, h, f)), postcompose(phi, VertexMap(g, h, q))));
        }
      }
    }
    // psi : K -> G pulls back H^G -> H^K.
    const auto gmaps = oracle::all_maps(g->order(), h->order());
    for (const auto& psi : enumerate_homs(k, g)) {
      for (const auto& f : gmaps) {
        for (const auto& q : gmaps) {
          if (!oracle::exp_adj(*g, *h, f, q)) continue;
          ASSERT_TRUE(exp_edge(precompose(psi, VertexMap(g, h, f)), precompose(psi, VertexMap(g, h, q))));
        }
      }
    }
  };
  const auto small = shared_graphs(2);
  for (const auto& g : small)
    for (const auto& h : small)
      for (const auto& k : small) check(g, h, k);
  const auto three = shared_graphs(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    check(three[rng() % three.size()], three[rng() % three.size()], three[rng() % three.size()]);
  }
}

TEST(Curry, AdjunctionBijectionOnSmallTriples) {
  const auto small = shared_graphs(2);
  for (const auto& g : small) {
    for (const auto& h : small) {
      const auto gxh = share(product(*g, *h));
      for (const auto& k : small) {
        const auto kh = realize_exponential(h, k);
        const auto khr = share(*kh.realized);
        const auto left = enumerate_homs(gxh, k);
        const auto right = enumerate_homs(g, khr);
        ASSERT_EQ(left.size(), right.size());
        std::set<std::vector<Vertex>> images;
        for (const auto& f : left) {
          const CurriedMap c = curry(f, g, h);
          ASSERT_TRUE(c.is_morphism());
          const VertexMap as_map = c.into(khr, kh);
          ASSERT_TRUE(is_morphism(as_map));
          images.insert(as_map.image);
          ASSERT_EQ(uncurry(c, gxh), f);
        }
        std::set<std::vector<Vertex>> want;
        for (const auto& m : right) want.insert(m.image);
        ASSERT_EQ(images, want);
      }
    }
  }
}

TEST(Curry, RoundTripOnThreeVertexFactors) {
  const auto three = shared_graphs(3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto g = three[rng() % three.size()], h = three[rng() % three.size()],
               k = three[rng() % three.size()];
    const auto gxh = share(product(*g, *h));
    const auto homs = enumerate_hom_assignments(*gxh, *k);
    for (std::size_t i = 0; i < homs.size() && i < 50; ++i) {
      const VertexMap f(gxh, k, homs[i]);
      const CurriedMap c = curry(f, g, h);
      ASSERT_TRUE(c.is_morphism());
      ASSERT_EQ(uncurry(c, gxh), f);
    }
  }
}

TEST(Curry, ProjectionCurriesToConstantRows) {
  const auto g = fx::p2(), h = fx::c4();
  const auto gxh = share(product(*g, *h));
  std::vector<Vertex> img;
  for (Vertex v = 0; v < gxh->order(); ++v) img.push_back(v % h->order());
  const CurriedMap c = curry(VertexMap(gxh, h, img), g, h);
  for (const auto& row : c.rows) EXPECT_EQ(row, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(c.is_morphism());
}

TEST(Curry, HomotopyCurriesToLoopedWalk) {
  // Lambda : I_1 x P_2 -> P_2 with Lambda(0, -) = id and Lambda(1, -) = aba.
  const auto p = fx::p2();
  const auto i1 = share(looped_path_graph(1));
  const auto ixp = share(product(*i1, *p));
  const VertexMap lambda(ixp, p, {0, 1, 2, 0, 1, 0});
  ASSERT_TRUE(is_morphism(lambda));
  const CurriedMap c = curry(lambda, i1, p);
  EXPECT_TRUE(c.is_morphism());
  EXPECT_EQ(VertexMap(p, p, c.rows[0]), identity_map(p));
  EXPECT_EQ(VertexMap(p, p, c.rows[1]).word(), "aba");
  for (const auto& row : c.rows) EXPECT_TRUE(is_morphism(*p, *p, row));
}

TEST(Curry, NonMorphismRejected) {
  const auto g = fx::p2(), h = fx::p2();
  const auto gxh = share(product(*g, *h));
  EXPECT_THROW(curry(VertexMap(gxh, g, std::vector<Vertex>(9, 0)), g, h), Error);
}
