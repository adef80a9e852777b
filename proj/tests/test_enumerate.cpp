#include <gtest/gtest.h>

#include "ghom/enumerate.hpp"
#include "support.hpp"

using namespace ghom;

TEST(Enumerate, ExactCounts) {
  EXPECT_EQ(GraphFamily(1, true).size(), 2U);
  EXPECT_EQ(GraphFamily(2, false).size(), 2U);
  EXPECT_EQ(GraphFamily(2, true).size(), 8U);
  EXPECT_EQ(GraphFamily(4, true).size(), 1024U);
}

TEST(Enumerate, UpToMaxConcatenatesFamilies) {
  std::size_t count = 0;
  enumerate_graphs(3, false, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 1U + 2U + 8U);
  EXPECT_EQ(all_graphs(3, true).size(), 2U + 8U + 64U);
}

TEST(Enumerate, DistinctLabelledGraphs) {
  for (bool loops : {false, true}) {
    const GraphFamily fam(4, loops);
    std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
    for (std::uint64_t k = 0; k < fam.size(); ++k) {
      const Graph g = fam.at(k);
      ASSERT_EQ(g.order(), 4U);
      if (!loops) ASSERT_EQ(g.loop_count(), 0U);
      ASSERT_TRUE(seen.insert(g.edges()).second);
    }
  }
}

TEST(Enumerate, DeterministicOrder) {
  const auto a = all_graphs(3, true);
  const auto b = all_graphs(3, true);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_EQ(a.front().edge_count(), 0U);
  EXPECT_EQ(a.front().names(), std::vector<std::string>{"0"});
}

TEST(Enumerate, CapIsEnforced) {
  try {
    enumerate_graphs(7, false, [](const Graph&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}
