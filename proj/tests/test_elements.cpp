#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "hbo/combinatorics.hpp"
#include "hbo/ground_set.hpp"

using namespace hbo;
using testing_helpers::texts;

namespace {

std::vector<std::string> texts_of(const std::vector<std::vector<Element>>& chains, std::size_t i) {
  return texts(chains.at(i));
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Parse, RoundTripsEveryGeneratedElement) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      for (const auto& e : all_elements(Family::B, n, k)) EXPECT_EQ(parse_element(to_string(e)), e) << to_string(e);
      if (k <= n)
        for (const auto& e : enumerate(Family::A, n, k)) EXPECT_EQ(parse_element(to_string(e)), e);
    }
}

TEST(Parse, AcceptsStarSpellingsAndSpaces) {
  EXPECT_EQ(to_string(parse_element("[ 2, 1, * ]")), "[2,1,*]");
  EXPECT_EQ(to_string(parse_element("[1,2,★]")), "[2,1,*]");
  EXPECT_EQ(to_string(parse_element("[-2,*]")), "[2,*]");
  EXPECT_EQ(to_string(parse_element("{3,1}")), "{1,3}");
  EXPECT_EQ(to_string(parse_element("-3")), "-3");
}

TEST(Parse, RejectsMalformedText) {
  for (const char* bad : {"", "[", "[1,1]", "[0,1]", "[*,1]", "[1,*,*]", "{1,1}", "{0}", "0", "x", "[1,2"})
    EXPECT_THROW(parse_element(bad), argument_error) << bad;
}

TEST(NormalizeOrbit, PicksTheRepresentativeWithNegativeLargestMagnitude) {
  EXPECT_EQ(to_string(normalize_orbit({3, -2})), "[-3,2]");
  EXPECT_EQ(to_string(normalize_orbit({-1, 2})), "[-2,1]");
  EXPECT_EQ(to_string(normalize_orbit({-2, -1})), "[-2,-1]");
  EXPECT_THROW(normalize_orbit({2, -2}), argument_error);
}

TEST(NormalizeOrbit, IsIdempotentAndInvariantUnderNegation) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= 3; ++k)
      for (const auto& e : all_elements(Family::B, n, k)) {
        const auto* b = std::get_if<BElem>(&e);
        if (!b || b->is_star()) continue;
        std::vector<int> neg = b->entries();
        for (int& v : neg) v = -v;
        EXPECT_EQ(normalize_orbit(b->entries()), *b);
        EXPECT_EQ(normalize_orbit(neg), *b);
      }
}

TEST(EnumerateA, LexicographicOrder) {
  EXPECT_EQ(texts(enumerate(Family::A, 3, 2)), (std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}"}));
  EXPECT_EQ(texts(enumerate(Family::A, 3, 1)), (std::vector<std::string>{"{1}", "{2}", "{3}"}));
  const auto four = texts(enumerate(Family::A, 4, 3));
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(four.front(), "{1,2,3}");
  EXPECT_EQ(four.back(), "{2,3,4}");
  EXPECT_THROW(enumerate_A(3, 4), argument_error);
  EXPECT_THROW(enumerate_A(0, 1), argument_error);
}

TEST(PacketA, SubsetsOfOneSizeLess) {
  EXPECT_EQ(texts(packet_of(parse_element("{1,2,3}")).elements),
            (std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}"}));
  EXPECT_EQ(texts(packet_of(parse_element("{1,2}")).elements), (std::vector<std::string>{"{1}", "{2}"}));
  EXPECT_EQ(packet_of(parse_element("{1,2,3,4}")).elements.size(), 4u);
  EXPECT_THROW(packet_A(KSubset({1})), argument_error);
}

TEST(EnumerateB, StandardOrders) {
  EXPECT_EQ(texts(enumerate_B(2, 1)), (std::vector<std::string>{"-2", "-1", "1", "2"}));
  EXPECT_EQ(texts(enumerate_B(2, 2)), (std::vector<std::string>{"[-2,-1]", "[2,*]", "[-2,1]", "[1,*]"}));
  EXPECT_EQ(texts(enumerate_B(3, 2)),
            (std::vector<std::string>{"[-3,-2]", "[-3,-1]", "[-2,-1]", "[3,*]", "[-3,2]", "[-3,1]", "[2,*]",
                                      "[-2,1]", "[1,*]"}));
  EXPECT_THROW(enumerate_B(3, 4), unsupported_level);
  EXPECT_THROW(enumerate_B(3, 0), unsupported_level);
}

TEST(EnumerateB, LevelThreeStandardOrderBlocks) {
  // Three-negative orbits, then two-negative orbits interleaved with stars, then one-negative orbits.
  const auto v = texts(enumerate_B(3, 3));
  EXPECT_EQ(v, (std::vector<std::string>{"[-3,-2,-1]", "[3,2,*]", "[-3,-2,1]", "[-3,-1,2]", "[3,1,*]", "[2,1,*]",
                                         "[-3,2,1]"}));
}

TEST(EnumerateB, SizesMatchTheClosedForms) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_B(n, 1).size(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(enumerate_B(n, 2).size(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(enumerate_B(n, 3).size(), 4 * choose(n, 3) + choose(n, 2));
  }
}

TEST(EnumerateB, StandardOrderIsStrictAndDuplicateFree) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto v = enumerate_B(n, k);
      for (std::size_t i = 0; i + 1 < v.size(); ++i) EXPECT_TRUE(standard_less(v[i], v[i + 1]));
      std::set<std::string> distinct;
      for (const auto& e : v) distinct.insert(to_string(e));
      EXPECT_EQ(distinct.size(), v.size());
    }
}

TEST(PacketB, OrbitOfLevelTwoHasTwoChains) {
  const auto p = packet_of(parse_element("[-3,2]"));
  EXPECT_EQ(texts(p.elements), (std::vector<std::string>{"-3", "-2", "2", "3"}));
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(texts_of(p.components, 0), (std::vector<std::string>{"-3", "2"}));
  EXPECT_EQ(texts_of(p.components, 1), (std::vector<std::string>{"-2", "3"}));
}

TEST(PacketB, StarOfLevelTwoIsOneChain) {
  const auto p = packet_of(parse_element("[2,*]"));
  ASSERT_EQ(p.components.size(), 1u);
  EXPECT_EQ(texts_of(p.components, 0), (std::vector<std::string>{"-2", "2"}));
}

TEST(PacketB, LevelThreeChainsFollowStandardOrder) {
  auto orbit = packet_of(parse_element("[-3,2,1]"));
  ASSERT_EQ(orbit.components.size(), 1u);
  EXPECT_EQ(texts_of(orbit.components, 0), (std::vector<std::string>{"[-2,-1]", "[-3,2]", "[-3,1]"}));
  auto star = packet_of(parse_element("[2,1,*]"));
  ASSERT_EQ(star.components.size(), 1u);
  EXPECT_EQ(texts_of(star.components, 0), (std::vector<std::string>{"[-2,-1]", "[2,*]", "[-2,1]", "[1,*]"}));
}

TEST(PacketB, LevelFourPacketsAreBuiltAndOthersRejected) {
  EXPECT_EQ(packet_of(parse_element("[-4,-3,-2,-1]")).elements.size(), 4u);
  // [3,2,1,*]: the 4 orbits of {1,2,3} plus the 3 two-element stars.
  EXPECT_EQ(packet_of(parse_element("[3,2,1,*]")).elements.size(), 7u);
  EXPECT_THROW(packet_B(BElem::orbit({-5, -4, -3, -2, -1})), unsupported_level);
  EXPECT_THROW(packet_of(parse_element("-1")), argument_error);
}

TEST(PacketB, EveryPacketLiesInTheLowerLevel) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const GroundSet gs(Family::B, n, k);
      for (std::size_t u = 0; u < gs.upper().size(); ++u) {
        const auto p = packet_of(gs.upper()[u]);
        std::size_t in_chains = 0;
        for (const auto& c : p.components) in_chains += c.size();
        EXPECT_EQ(in_chains, p.elements.size());
        for (const auto& e : p.elements) EXPECT_NO_THROW(gs.index_of(e));
      }
    }
}

TEST(GroundSet, Commutation) {
  const GroundSet a(Family::A, 4, 2);
  EXPECT_TRUE(a.commutes(a.index_of(parse_element("{1,2}")), a.index_of(parse_element("{3,4}"))));
  EXPECT_FALSE(a.commutes(a.index_of(parse_element("{1,2}")), a.index_of(parse_element("{1,3}"))));
  const GroundSet b3(Family::B, 3, 2);
  EXPECT_TRUE(b3.commutes(b3.index_of(parse_element("[-2,-1]")), b3.index_of(parse_element("[3,*]"))));
  const GroundSet b1(Family::B, 2, 1);
  EXPECT_FALSE(b1.commutes(b1.index_of(parse_element("-2")), b1.index_of(parse_element("-1"))));
  EXPECT_FALSE(b1.commutes(0, 0));
}

TEST(GroundSet, ScopeErrors) {
  EXPECT_THROW(GroundSet(Family::B, 2, 4), unsupported_level);
  EXPECT_THROW(GroundSet(Family::A, 2, 3), argument_error);
  EXPECT_THROW(GroundSet(Family::B, 0, 1), argument_error);
  const GroundSet gs(Family::B, 2, 1);
  EXPECT_THROW(gs.index_of(parse_element("3")), argument_error);
  EXPECT_THROW(gs.upper_index_of(parse_element("[-3,1]")), argument_error);
}
