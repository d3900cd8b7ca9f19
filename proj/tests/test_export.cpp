#include <gtest/gtest.h>

#include "hbo/export.hpp"

using namespace hbo;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Dot, TwoNodePoset) {
  const auto dot = export_dot(build_poset(Family::B, 2, 2));
  EXPECT_EQ(count(dot, "[label=\""), 3u);
  EXPECT_EQ(count(dot, " -> "), 1u);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"[2,1,*]\"]"), std::string::npos);
  EXPECT_NE(dot.find("n0 [label=\"0: [-2,-1] [2,*] [-2,1] [1,*]\"]"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph bruhat_B_2_2 {", 0), 0u);
}

TEST(Dot, SingleNodePoset) {
  const auto dot = export_dot(build_poset(Family::A, 1, 1));
  EXPECT_EQ(count(dot, "[label=\""), 1u);
  EXPECT_EQ(count(dot, " -> "), 0u);
}

TEST(Dot, IsByteIdenticalAcrossRuns) {
  EXPECT_EQ(export_dot(build_poset(Family::B, 3, 2)), export_dot(build_poset(Family::B, 3, 2)));
}

TEST(Json, ShapeOfTheDocument) {
  const auto j = to_json(build_poset(Family::B, 2, 1));
  EXPECT_EQ(j.at("family"), "B");
  EXPECT_EQ(j.at("nodes").size(), 8u);
  EXPECT_EQ(j.at("edges").size(), 8u);
  EXPECT_EQ(j.at("nodes")[0].at("canon"), nlohmann::json::array({"-2", "-1", "1", "2"}));
  EXPECT_TRUE(j.at("nodes")[0].at("inv").empty());
}

TEST(Json, RoundTrip) {
  for (auto f : {Family::A, Family::B})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k) {
        if (f == Family::A && k > n) continue;
        const auto p = build_poset(f, n, k);
        const auto back = from_json(nlohmann::json::parse(to_json(p).dump()));
        EXPECT_TRUE(same_poset(p, back));
      }
  EXPECT_FALSE(same_poset(build_poset(Family::B, 2, 1), build_poset(Family::B, 2, 2)));
}

TEST(Json, MalformedInputIsRejected) {
  auto j = to_json(build_poset(Family::B, 2, 1));
  auto missing = j;
  missing.erase("nodes");
  EXPECT_THROW(from_json(missing), argument_error);
  auto bad_edge = j;
  bad_edge["edges"][0]["dst"] = 99;
  EXPECT_THROW(from_json(bad_edge), argument_error);
  auto bad_element = j;
  bad_element["nodes"][0]["canon"][0] = "7";
  EXPECT_THROW(from_json(bad_element), argument_error);
  auto bad_family = j;
  bad_family["family"] = "C";
  EXPECT_THROW(from_json(bad_family), argument_error);
}
