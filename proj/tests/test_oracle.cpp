#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cograph/oracle.hpp"

using namespace cograph;

TEST(Catalog, SmallCounts) {
  EXPECT_EQ(enumerate_cotrees(1).items.size(), 1U);
  const auto two = enumerate_cotrees(2).items;
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0].encoding(), "*(v,v)");
  EXPECT_EQ(two[1].encoding(), "+(v,v)");
  EXPECT_EQ(enumerate_cotrees(4).items.size(), 10U);
}

TEST(Catalog, CountsThroughTen) {
  // Unlabeled cographs on n vertices.
  const std::vector<std::size_t> expected = {1, 2, 4, 10, 24, 66, 180, 522, 1532, 4624};
  const auto levels = enumerate_cotrees_upto(10);
  ASSERT_EQ(levels.size(), 10U);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(levels[static_cast<std::size_t>(n - 1)].items.size(), expected[n - 1]) << n;
  EXPECT_THROW(enumerate_cotrees(11), CapacityError);
}

TEST(Catalog, ItemsAreDistinctAndCanonical) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for (const auto& g : enumerate_cotrees(n).items) {
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_EQ(parse_encoding(g.encoding()).encoding(), g.encoding());
      EXPECT_TRUE(seen.insert(g.encoding()).second) << g.encoding();
    }
  }
}

// Completeness against an independent route: every labeled graph filtered by
// induced-P_4-freeness and reduced up to isomorphism.
TEST(Catalog, MatchesLabeledSearchUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    const auto reps = unlabeled_cographs_bruteforce(n);
    const auto catalog = enumerate_cotrees(n).items;
    ASSERT_EQ(reps.size(), catalog.size()) << n;
    std::vector<bool> hit(reps.size(), false);
    for (const auto& g : catalog) {
      const auto a = to_adjacency(g);
      int matches = 0;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (detail::isomorphic(a, reps[i])) {
          hit[i] = true;
          ++matches;
        }
      EXPECT_EQ(matches, 1) << g.encoding();
    }
    for (bool h : hit) EXPECT_TRUE(h);
  }
}

TEST(Oracle, ContainsBiclique) {
  const auto c4 = to_adjacency(parse_encoding("*(+(v,v),+(v,v))"));
  EXPECT_TRUE(contains_biclique(c4, 2, 2));
  EXPECT_FALSE(contains_biclique(c4, 2, 3));
  const auto k3 = to_adjacency(make_clique(3));
  EXPECT_FALSE(contains_biclique(k3, 1, 3));
  EXPECT_TRUE(contains_biclique(k3, 1, 2));
  EXPECT_TRUE(contains_biclique(to_adjacency(make_clique(4)), 2, 2));
  // K_{s,0} is s isolated vertices.
  EXPECT_TRUE(contains_biclique(to_adjacency(make_edgeless(3)), 3, 0));
  EXPECT_FALSE(contains_biclique(to_adjacency(make_edgeless(3)), 4, 0));
}

TEST(Oracle, BruteForceSequenceExamples) {
  EXPECT_EQ(biclique_sequence_bruteforce(to_adjacency(parse_encoding("*(+(v,v),+(v,v))")), 4).to_string(),
            "(4,2,2,0,0)");
  EXPECT_EQ(biclique_sequence_bruteforce(to_adjacency(make_leaf()), 2).to_string(), "(1,0,-inf)");
  EXPECT_EQ(biclique_sequence_bruteforce(to_adjacency(make_edgeless(3)), 3).to_string(), "(3,0,0,0)");
}

TEST(Oracle, ExtremalExamples) {
  const auto c22 = extremal_bruteforce(5, forbidden_biclique_profile(2, 2));
  ASSERT_TRUE(c22);
  EXPECT_EQ(c22->edges, 6);
  const auto c33 = extremal_bruteforce(6, forbidden_biclique_profile(3, 3));
  ASSERT_TRUE(c33);
  EXPECT_EQ(c33->edges, 12);

  // Every edge is a K_{1,1}; (3,0,0,0) is what E_3 has.
  const auto none = extremal_bruteforce(3, validate({3, 0, 0, 0}, kNegInf));
  ASSERT_TRUE(none);
  EXPECT_EQ(none->edges, 0);
  ASSERT_EQ(none->witnesses.size(), 1U);
  EXPECT_EQ(none->witnesses[0], make_edgeless(3));
}

TEST(Oracle, ExtremalWitnessesAreAllMaximizers) {
  const auto p = forbidden_biclique_profile(2, 2);
  const auto cat = enumerate_cotrees(6);
  const auto ex = extremal_bruteforce(cat, p);
  ASSERT_TRUE(ex);
  std::size_t expected = 0;
  for (const auto& g : cat.items)
    if (!contains_biclique(to_adjacency(g), 2, 2) && g.edge_count() == ex->edges) ++expected;
  EXPECT_EQ(ex->witnesses.size(), expected);
}

TEST(Oracle, ExtremalEmptyWhenNothingFulfills) {
  // Three vertices but the profile allows only two.
  EXPECT_FALSE(extremal_bruteforce(3, validate({2, 1, 0}, kNegInf)));
}

TEST(Oracle, BalancedBicliqueHoldsFromTwoVertices) {
  for (int n = 2; n <= 8; ++n) {
    const auto r = check_balanced_biclique(n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_EQ(r.cases, enumerate_cotrees(n).items.size());
  }
}

// K_{1,1} needs two vertices; with n = 1 the claim has nothing to stand on.
TEST(Oracle, BalancedBicliqueFailsOnSingleVertex) {
  const auto r = check_balanced_biclique(1);
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.counterexamples.size(), 1U);
  EXPECT_EQ(r.counterexamples[0], "v");
}

TEST(Structure, Helpers) {
  const auto g = parse_encoding("*(+(*(v,v,v),*(v,v,v)),v,v)");
  EXPECT_EQ(universal_vertex_count(g), 2);
  EXPECT_TRUE(is_edge_times_sum_of_cliques(g));
  EXPECT_FALSE(is_edge_times_sum_of_cliques(parse_encoding("*(+(*(v,v,v),*(v,v,v)),v)")));
  EXPECT_TRUE(is_regular(parse_encoding("*(+(v,v),+(v,v))"), 2));
  EXPECT_FALSE(is_regular(parse_encoding("*(+(v,v),v)"), 2));
  EXPECT_TRUE(is_clique(make_clique(4)));
  EXPECT_FALSE(is_clique(make_edgeless(2)));
  EXPECT_EQ(components(parse_encoding("+(*(v,v),v,v)")).size(), 3U);
  EXPECT_EQ(parse_structure_check("k33"), StructureCheck::k33);
  EXPECT_FALSE(parse_structure_check("k44"));
}

TEST(Structure, ClassificationChecksHoldOnSmallRange) {
  for (auto which : {StructureCheck::star, StructureCheck::k2t, StructureCheck::k33, StructureCheck::lifting,
                     StructureCheck::component_bound}) {
    const auto r = check_structure_theorems(1, 8, which);
    EXPECT_TRUE(r.passed) << r.check << ": " << (r.notes.empty() ? "" : r.notes.front());
    EXPECT_GT(r.cases, 0U);
  }
}

TEST(Structure, LiftingOnKnownExtremals) {
  const auto p = forbidden_biclique_profile(2, 2);
  const auto ex = extremal_bruteforce(7, p);
  ASSERT_TRUE(ex);
  for (const auto& w : ex->witnesses) {
    EXPECT_TRUE(check_lifting(w, p).passed) << w.encoding();
    EXPECT_TRUE(check_component_size_bound(w, p).passed) << w.encoding();
  }
}
