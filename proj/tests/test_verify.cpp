#include <gtest/gtest.h>

#include "json.hpp"

#include "ghom/error.hpp"
#include "ghom/verify.hpp"

using namespace ghom;

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesAtDefaultSize) {
  const auto r = run_suite(GetParam(), SuiteOptions{});
  EXPECT_EQ(r.max_vertices, default_max_vertices(GetParam()));
  EXPECT_GT(r.instances, 0U);
  for (const auto& f : r.failures) ADD_FAILURE() << f.instance << ": " << f.reason << " " << f.data;
  EXPECT_EQ(r.budget_exhausted, 0U);
  EXPECT_TRUE(r.passed());
}

TEST_P(EverySuite, SerialAndParallelAgree) {
  SuiteOptions serial, parallel;
  serial.execution = Execution::Serial;
  serial.max_vertices = parallel.max_vertices = 3;
  serial.seed = parallel.seed = 42;
  const auto a = run_suite(GetParam(), serial), b = run_suite(GetParam(), parallel);
  EXPECT_EQ(report_json(a), report_json(b));
  EXPECT_EQ(report_json(b), report_json(run_suite(GetParam(), parallel)));
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Verify, Names) {
  EXPECT_EQ(suite_names().size(), 8U);
  EXPECT_EQ(default_max_vertices("pleat-confluence"), 4U);
  EXPECT_EQ(default_max_vertices("spider"), 3U);
  EXPECT_THROW(default_max_vertices("nope"), Error);
}

// Exact instance counts follow from the labelled enumeration.
TEST(Verify, InstanceCounts) {
  // 2 + 8 + 64 + 1024 labelled graphs with loops on 1..4 vertices
  EXPECT_EQ(run_suite("pleat-confluence", 4, 1).instances, 1098U);
  // 74 graphs on 1..3 vertices, all ordered pairs
  EXPECT_EQ(run_suite("hom-loop", 3, 1).instances, 74U * 74U);
  // 46 loopless graphs on 1..4 vertices without isolated vertices
  EXPECT_EQ(run_suite("pleat-product", 4, 1).instances, 46U * 46U);
}

TEST(Verify, PleatConfluenceOnFiveVertices) {
  SuiteOptions o;
  o.max_vertices = 5;
  o.fold_orders = 20;
  const auto r = run_suite("pleat-confluence", o);
  EXPECT_EQ(r.instances, 1098U + 32768U);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, Errors) {
  try {
    run_suite("no-such-suite", 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
  try {
    run_suite("spider", 9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Verify, ReportShape) {
  const auto r = run_suite("interchange", 2, 9);
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j.at("suite"), "interchange");
  EXPECT_EQ(j.at("seed"), 9);
  EXPECT_EQ(j.at("max_vertices"), 2);
  EXPECT_EQ(j.at("instances"), 200);
  EXPECT_TRUE(j.at("failures").empty());
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_TRUE(nlohmann::json::parse(report_json(r, true)).contains("wall_seconds"));
}

TEST(Verify, SeedChangesSampling) {
  const auto a = run_suite("groupoid-axioms", 4, 1);
  const auto b = run_suite("groupoid-axioms", 4, 2);
  EXPECT_TRUE(a.passed());
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(report_json(a), report_json(run_suite("groupoid-axioms", 4, 1)));
}
