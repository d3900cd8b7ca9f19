#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "hbo/poset.hpp"
#include "hbo/weyl.hpp"

using namespace hbo;
using testing_helpers::order_of;
using testing_helpers::upper;

namespace {

std::set<std::vector<int>> letters_of(const std::vector<ReducedWord>& words) {
  std::set<std::vector<int>> out;
  for (const auto& w : words) out.insert(w.letters);
  return out;
}

}  // namespace

TEST(SignedPermutation, GroupOperations) {
  const auto s0 = SignedPermutation::simple(2, 0);
  const auto s1 = SignedPermutation::simple(2, 1);
  EXPECT_EQ(window(s0), "[-1, 2]");
  EXPECT_EQ(window(s1), "[2, 1]");
  EXPECT_EQ(s0 * s0, SignedPermutation::identity(2));
  EXPECT_EQ((s0 * s1) * (s0 * s1) * (s0 * s1) * (s0 * s1), SignedPermutation::identity(2));
  EXPECT_NE((s0 * s1) * (s0 * s1), SignedPermutation::identity(2));
  const SignedPermutation pi({-2, 1, 3});
  EXPECT_EQ(pi * pi.inverse(), SignedPermutation::identity(3));
  EXPECT_EQ(pi(-1), 2);
  EXPECT_THROW(SignedPermutation({1, -1}), argument_error);
  EXPECT_THROW(SignedPermutation::simple(2, 2), argument_error);
  EXPECT_THROW(Permutation({1, 1}), argument_error);
  EXPECT_THROW(Permutation::simple(3, 0), argument_error);
}

TEST(Roots, RootOfLevelTwoElements) {
  EXPECT_EQ(to_string(root_of(parse_element("[-2,-1]"), 2)), "e2-e1");
  EXPECT_EQ(to_string(root_of(parse_element("[-2,1]"), 2)), "e2+e1");
  EXPECT_EQ(to_string(root_of(parse_element("[2,*]"), 2)), "e2");
  EXPECT_EQ(to_string(root_of(parse_element("{1,3}"), 3)), "e1-e3");
  EXPECT_EQ(root_of(parse_element("[2,*]"), 2).kind(), Root::Kind::Short);
  EXPECT_THROW(root_of(parse_element("[2,1,*]"), 2), argument_error);
}

TEST(Roots, RootOfIsABijectionOntoPositiveRoots) {
  for (int n = 1; n <= 5; ++n) {
    std::set<Root> images;
    for (const auto& K : enumerate_B(n, 2)) {
      const Root r = root_of(K, n);
      EXPECT_TRUE(is_positive_B(r));
      images.insert(r);
    }
    const auto positive = positive_roots_B(n);
    EXPECT_EQ(images, std::set<Root>(positive.begin(), positive.end()));
    EXPECT_EQ(positive.size(), static_cast<std::size_t>(n * n));
    std::set<Root> a_images;
    if (n >= 2)
      for (const auto& K : enumerate(Family::A, n, 2)) a_images.insert(root_of(K, n));
    const auto a_positive = positive_roots_A(n);
    EXPECT_EQ(a_images, std::set<Root>(a_positive.begin(), a_positive.end()));
  }
}

TEST(Roots, Action) {
  const auto id = SignedPermutation::identity(2);
  const auto w0 = SignedPermutation::longest(2);
  const Root a = Root::pair(2, 2, 1, -1);
  EXPECT_EQ(act(id, a), a);
  EXPECT_EQ(to_string(act(w0, a)), "e1-e2");
  EXPECT_FALSE(is_positive_B(act(w0, a)));
  EXPECT_EQ(to_string(act(SignedPermutation({-1, 2}), Root::unit(2, 1))), "-e1");
  EXPECT_THROW(act(id, Root::unit(3, 1)), argument_error);
}

TEST(Roots, InversionsAndLength) {
  EXPECT_TRUE(weyl_inversions(SignedPermutation::identity(2)).empty());
  EXPECT_EQ(weyl_length(SignedPermutation::longest(2)), 4);
  EXPECT_EQ(weyl_inversions(SignedPermutation::longest(2)).size(), 4u);
  const auto s0 = weyl_inversions(SignedPermutation({-1, 2}));
  ASSERT_EQ(s0.size(), 1u);
  EXPECT_EQ(to_string(s0[0]), "e1");
  EXPECT_EQ(weyl_length(Permutation::longest(4)), 6);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(weyl_length(SignedPermutation::longest(n)), n * n);
}

TEST(Roots, LengthIsCayleyGraphDistance) {
  for (int n = 1; n <= 3; ++n) {
    std::map<SignedPermutation, int> dist{{SignedPermutation::identity(n), 0}};
    std::vector<SignedPermutation> queue{SignedPermutation::identity(n)};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int g = 0; g < n; ++g) {
        const auto next = SignedPermutation::simple(n, g) * queue[head];
        if (dist.emplace(next, dist.at(queue[head]) + 1).second) queue.push_back(next);
      }
    EXPECT_EQ(dist.size(), weak_order_poset(n).elements.size());
    for (const auto& [w, d] : dist) EXPECT_EQ(weyl_length(w), d) << window(w);
  }
}

TEST(OrderToPerm, Examples) {
  const GroundSet gs(Family::B, 2, 1);
  EXPECT_EQ(order_to_perm_B(gs, rho_min(gs)), SignedPermutation::identity(2));
  EXPECT_EQ(order_to_perm_B(gs, rho_max(gs)), SignedPermutation::longest(2));
  const auto pi = order_to_perm_B(gs, order_of(gs, {"-1", "-2", "2", "1"}));
  EXPECT_EQ(pi(1), 2);
  EXPECT_EQ(pi(2), 1);
  EXPECT_THROW(order_to_perm_B(gs, order_of(gs, {"-2", "-1", "2", "1"})), not_admissible);
  EXPECT_THROW(order_to_perm_B(GroundSet(Family::B, 2, 2), {0, 1, 2, 3}), argument_error);
}

TEST(OrderToPerm, RoundTripsOnEveryAdmissibleOrder) {
  for (int n = 1; n <= 3; ++n) {
    const GroundSet gs(Family::B, n, 1);
    std::set<SignedPermutation> seen;
    for (const auto& rho : enumerate_admissible(gs)) {
      const auto pi = order_to_perm_B(gs, rho);
      EXPECT_EQ(perm_to_order_B(gs, pi), rho);
      seen.insert(pi);
    }
    EXPECT_EQ(seen.size(), weak_order_poset(n).elements.size());
  }
}

TEST(InversionRoots, InversionSetMatchesNegativeImages) {
  const auto b2 = lemma17_check_B(2);
  EXPECT_TRUE(b2.ok());
  EXPECT_EQ(b2.instances, 8u * 4u);
  const auto b3 = lemma17_check_B(3);
  EXPECT_TRUE(b3.ok());
  EXPECT_EQ(b3.instances, 48u * 9u);
  EXPECT_TRUE(lemma17_check_A(3).ok());
  EXPECT_TRUE(lemma17_check_A(4).ok());
  EXPECT_TRUE(lemma17_check(2));
}

TEST(InversionRoots, SingleInstance) {
  const GroundSet gs(Family::B, 2, 1);
  const Order rho = order_of(gs, {"-1", "-2", "2", "1"});
  const auto pi = order_to_perm_B(gs, rho);
  EXPECT_FALSE(is_positive_B(act(pi, root_of(parse_element("[-2,-1]"), 2))));
  EXPECT_TRUE(is_positive_B(act(pi, root_of(parse_element("[1,*]"), 2))));
}

TEST(WeakOrder, Sizes) {
  EXPECT_EQ(weak_order_poset(1).elements.size(), 2u);
  const auto b2 = weak_order_poset(2);
  EXPECT_EQ(b2.elements.size(), 8u);
  EXPECT_EQ(b2.edges.size(), 8u);
  int top = 0;
  for (int l : b2.length) top = std::max(top, l);
  EXPECT_EQ(top, 4);
  EXPECT_EQ(std::count(b2.length.begin(), b2.length.end(), 4), 1);
  EXPECT_EQ(b2.elements[b2.index.at(SignedPermutation::longest(2))], SignedPermutation::longest(2));
  const auto s3 = weak_order_poset_A(3);
  EXPECT_EQ(s3.elements.size(), 6u);
  EXPECT_EQ(*std::max_element(s3.length.begin(), s3.length.end()), 3);
}

TEST(WeakOrder, IsomorphicToLevelOnePosets) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = iso_report_B(n);
    EXPECT_TRUE(r.ok()) << r.counterexample;
    EXPECT_EQ(r.poset_nodes, r.group_order);
    EXPECT_EQ(r.poset_edges, r.weak_edges);
  }
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(iso_report_A(n).ok());
  EXPECT_TRUE(iso_check(2));
}

TEST(WeakOrder, FlipOfStarAtTheMinimumIsTheSignChange) {
  const GroundSet gs(Family::B, 2, 1);
  const Order next = packet_flip(gs, rho_min(gs), upper(gs, "[1,*]"));
  EXPECT_EQ(order_to_perm_B(gs, next), SignedPermutation::simple(2, 0));
}

TEST(Words, TextFormats) {
  const ReducedWord w{Family::B, 2, {0, 1, 0, 1}};
  EXPECT_EQ(to_string(w), "s0 s1 s0 s1");
  EXPECT_EQ(product_expression(w), "s1 s0 s1 s0");
  EXPECT_EQ(parse_word(Family::B, 2, "s0 s1 s0 s1"), w);
  EXPECT_THROW(parse_word(Family::B, 2, "s0 t1"), argument_error);
  EXPECT_TRUE(is_reduced(w));
  EXPECT_TRUE(evaluates_to_longest(w));
  EXPECT_FALSE(is_reduced(ReducedWord{Family::B, 2, {0, 0}}));
}

TEST(Words, ChainToWordExample) {
  const auto p = build_poset(Family::B, 2, 1);
  const auto& gs = p.ground();
  std::vector<int> chain;
  for (const char* s : {"[-2,-1]", "[2,*]", "[-2,1]", "[1,*]"}) chain.push_back(upper(gs, s));
  const auto w = chain_to_word(gs, chain);
  EXPECT_EQ(w.letters, (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(evaluate_B(2, w.letters), SignedPermutation::longest(2));
  EXPECT_THROW(chain_to_word(gs, {chain[0], chain[1]}), argument_error);
  EXPECT_THROW(chain_to_word(gs, {chain[0], chain[0], chain[1], chain[2]}), argument_error);
  EXPECT_THROW(chain_to_word(GroundSet(Family::B, 2, 2), {0}), argument_error);
}

TEST(Words, BruteForceOracleAgreesWithWeakOrderPaths) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(letters_of(reduced_words_of_longest(Family::B, n)), oracle::reduced_words_longest(true, n)) << n;
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(letters_of(reduced_words_of_longest(Family::A, n)), oracle::reduced_words_longest(false, n)) << n;
  EXPECT_EQ(oracle::reduced_words_longest(true, 2).size(), 2u);
  EXPECT_EQ(oracle::reduced_words_longest(true, 3).size(), 42u);
  EXPECT_EQ(oracle::reduced_words_longest(false, 4).size(), 16u);
}

TEST(Words, EvaluationMatchesTheOracleArithmetic) {
  for (const auto& w : oracle::reduced_words_longest(true, 3)) {
    const auto pi = evaluate_B(3, w);
    EXPECT_EQ(pi.images(), oracle::apply_signed(3, w));
  }
  const std::vector<int> some{1, 0, 2, 1};
  EXPECT_EQ(evaluate_B(3, some).images(), oracle::apply_signed(3, some));
  EXPECT_EQ(evaluate_A(4, {1, 3, 2}).images(), oracle::apply_unsigned(4, {1, 3, 2}));
}

TEST(Words, BraidClassification) {
  EXPECT_EQ(braid_classify(parse_element("[2,1,*]")), BraidArity::M4);
  EXPECT_EQ(braid_classify(parse_element("[-3,2,1]")), BraidArity::M3);
  EXPECT_EQ(braid_classify(parse_element("{1,2,3}")), BraidArity::M3);
  EXPECT_THROW(braid_classify(parse_element("[2,*]")), argument_error);
  EXPECT_EQ(coxeter_m(Family::B, 0, 1), 4);
  EXPECT_EQ(coxeter_m(Family::B, 1, 2), 3);
  EXPECT_EQ(coxeter_m(Family::B, 0, 2), 2);
  EXPECT_EQ(coxeter_m(Family::A, 1, 2), 3);
}

TEST(Words, MoveDetection) {
  const ReducedWord a{Family::B, 2, {0, 1, 0, 1}};
  const ReducedWord b{Family::B, 2, {1, 0, 1, 0}};
  const auto mv = word_move(a, b);
  ASSERT_TRUE(mv);
  EXPECT_EQ(mv->length, 4);
  EXPECT_EQ(mv->position, 0);
  const auto comm = word_move(ReducedWord{Family::B, 3, {0, 2, 1}}, ReducedWord{Family::B, 3, {2, 0, 1}});
  ASSERT_TRUE(comm);
  EXPECT_EQ(comm->length, 2);
  EXPECT_FALSE(word_move(a, a));
  EXPECT_FALSE(word_move(ReducedWord{Family::B, 3, {0, 1, 2}}, ReducedWord{Family::B, 3, {1, 0, 2}}));
}

TEST(Words, CorrespondenceWithLevelTwoOrders) {
  for (int n = 2; n <= 3; ++n) {
    const auto r = word_correspondence_report(Family::B, n);
    EXPECT_TRUE(r.ok()) << r.counterexample;
    EXPECT_EQ(r.orderings, oracle::reduced_words_longest(true, n).size());
    EXPECT_EQ(r.reduced_words, r.orderings);
  }
  for (int n = 3; n <= 4; ++n) EXPECT_TRUE(word_correspondence_report(Family::A, n).ok());
}
