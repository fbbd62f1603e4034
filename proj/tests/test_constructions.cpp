#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cograph/constructions.hpp"
#include "cograph/enumerator.hpp"
#include "cograph/oracle.hpp"

using namespace cograph;

namespace {

bool d_regular(const Cotree& g, std::int64_t d) {
  const auto deg = leaf_degrees(g);
  return std::all_of(deg.begin(), deg.end(), [&](std::int64_t x) { return x == d; });
}

}  // namespace

TEST(Pump, ReplicatesSummand) {
  const auto g = parse_encoding("*(+(*(v,v,v),*(v,v,v)),v,v)");
  // Children sort as [sum, leaf, leaf]; 0/0 is the first triangle.
  const ChildPath at{0, 0};
  EXPECT_EQ(outside_neighborhood_size(g, at), 2);
  const auto p = pump(g, at, 1);
  EXPECT_EQ(p.vertex_count(), 11);
  EXPECT_EQ(p.edge_count(), 1 + 3 * 3 + 2 * 9);
  EXPECT_EQ(p.encoding(), "*(+(*(v,v,v),*(v,v,v),*(v,v,v)),v,v)");
  EXPECT_EQ(pumped_edge_count(g, at, 1), p.edge_count());
  EXPECT_EQ(pump(g, at, 0), g);
}

TEST(Pump, EdgeFormulaMatchesRebuild) {
  const auto g = parse_encoding("+(*(+(v,v),v),*(+(*(v,v),v),v,v))");
  for (const ChildPath& at : {ChildPath{0}, ChildPath{1}, ChildPath{0, 0, 0}})
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto p = pump(g, at, k);
      EXPECT_EQ(p.edge_count(), pumped_edge_count(g, at, k));
      EXPECT_EQ(to_adjacency(p, 40).edge_count(), p.edge_count());
    }
}

TEST(Pump, RejectsBadPaths) {
  const auto g = parse_encoding("*(+(*(v,v,v),*(v,v,v)),v,v)");
  EXPECT_THROW(pump(g, ChildPath{5}, 1), std::invalid_argument);
  // The root is a product: its children are not summands.
  EXPECT_THROW(pump(g, ChildPath{1}, 1), std::invalid_argument);
  EXPECT_THROW(pump(g, ChildPath{}, 1), std::invalid_argument);
  EXPECT_THROW(pump(g, ChildPath{0, 0}, -1), std::invalid_argument);
}

TEST(Pump, VertexSubset) {
  const auto g = parse_encoding("*(+(*(v,v,v),*(v,v,v)),v,v)");
  const std::vector<int> first_triangle{0, 1, 2};
  EXPECT_EQ(pump_subset(g, first_triangle, 1), pump(g, ChildPath{0, 0}, 1));
  EXPECT_THROW(pump_subset(g, std::vector<int>{0, 3}, 1), std::invalid_argument);
  EXPECT_THROW(pump_subset(g, std::vector<int>{6}, 1), std::invalid_argument);
  EXPECT_THROW(pump_subset(g, std::vector<int>{}, 1), std::invalid_argument);
}

TEST(Regular, Examples) {
  const auto c4 = regular_cograph(4, 2);
  ASSERT_TRUE(c4.graph);
  EXPECT_EQ(c4.graph->encoding(), "*(+(v,v),+(v,v))");

  const auto r52 = regular_cograph(5, 2);
  EXPECT_FALSE(r52.graph);
  EXPECT_FALSE(r52.reason.empty());
  EXPECT_FALSE(regular_cograph(5, 3).graph);

  const auto r74 = regular_cograph(7, 4);
  ASSERT_TRUE(r74.graph);
  EXPECT_TRUE(d_regular(*r74.graph, 4));
  EXPECT_EQ(r74.graph->encoding(), complement(parse_encoding("+(*(v,v,v),*(+(v,v),+(v,v)))")).encoding());

  EXPECT_EQ(regular_cograph(6, 0).graph, make_edgeless(6));
  EXPECT_EQ(regular_cograph(6, 5).graph, make_clique(6));
  EXPECT_THROW(regular_cograph(4, 4), std::invalid_argument);
}

TEST(Regular, ConstructedGraphsAreRegular) {
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t d = 0; d < n; ++d) {
      const auto r = regular_cograph(n, d);
      if (!r.graph) continue;
      EXPECT_EQ(r.graph->vertex_count(), n);
      EXPECT_TRUE(d_regular(*r.graph, d)) << n << "," << d;
    }
}

TEST(Regular, FeasibilityMatchesCatalog) {
  const auto catalogs = enumerate_cotrees_upto(8);
  for (int n = 1; n <= 8; ++n)
    for (std::int64_t d = 0; d < n; ++d) {
      bool exists = false;
      for (const auto& g : catalogs[static_cast<std::size_t>(n - 1)].items) exists = exists || d_regular(g, d);
      EXPECT_EQ(regular_cograph(n, d).graph.has_value(), exists) << n << "," << d;
    }
}

TEST(CliqueProduct, EdgeCounts) {
  const auto g = clique_product_family(3, 3, 2);
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 19);
  EXPECT_EQ(clique_product_family(2, 2, 3).edge_count(), 3 + 6);
  EXPECT_EQ(clique_product_family(1, 3, 2), make_copies(make_clique(3), 2));
  EXPECT_THROW(clique_product_family(3, 2, 1), std::invalid_argument);
}

TEST(Families, StarExtremal) {
  const auto six = star_extremal(3, 6);
  EXPECT_EQ(six.edge_count(), 6);
  EXPECT_TRUE(d_regular(six, 2));
  const auto five = star_extremal(3, 5);
  EXPECT_EQ(five.edge_count(), 4);
  // Ties with K_3 + K_2; the smaller encoding wins.
  EXPECT_EQ(five.encoding(), "+(*(+(v,v),+(v,v)),v)");
  EXPECT_EQ(star_extremal(4, 3), make_clique(3));
}

TEST(Families, K2tExtremal) {
  EXPECT_EQ(k2t_extremal(2, 5).edge_count(), 6);
  EXPECT_EQ(universal_vertex_count(k2t_extremal(2, 5)), 1);
  EXPECT_EQ(k2t_extremal(3, 7).edge_count(), 12);
  EXPECT_EQ(k2t_extremal(3, 6).edge_count(), 9);
  EXPECT_EQ(k2t_extremal(3, 6).encoding(), "*(+(*(v,v),*(v,v,v)),v)");
  EXPECT_THROW(k2t_extremal(4, 6), std::domain_error);
}

TEST(Families, K33Extremal) {
  EXPECT_EQ(k33_extremal(8).edge_count(), 19);
  EXPECT_EQ(k33_extremal(9).edge_count(), 21);
  EXPECT_EQ(k33_extremal(2), make_clique(2));
}

TEST(Families, MatchDynamicProgram) {
  const auto s12 = extremal_function(1, 2, 1, 20);
  const auto s13 = extremal_function(1, 3, 1, 20);
  const auto s22 = extremal_function(2, 2, 2, 20);
  const auto s23 = extremal_function(2, 3, 2, 20);
  const auto s33 = extremal_function(3, 3, 2, 20);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(star_extremal(2, n).edge_count(), s12.values.at(n)) << n;
    EXPECT_EQ(star_extremal(3, n).edge_count(), s13.values.at(n)) << n;
    EXPECT_EQ(k2t_extremal(2, n).edge_count(), s22.values.at(n)) << n;
    EXPECT_EQ(k2t_extremal(3, n).edge_count(), s23.values.at(n)) << n;
    EXPECT_EQ(k33_extremal(n).edge_count(), s33.values.at(n)) << n;
  }
}

TEST(Davenport, Examples) {
  const std::vector<std::int64_t> ones{1, 1, 1};
  EXPECT_EQ(davenport_subsequence(ones, 3), (std::vector<std::size_t>{0, 1, 2}));
  const std::vector<std::int64_t> mixed{2, 3, 4, 5};
  const auto idx = davenport_subsequence(mixed, 4);
  ASSERT_FALSE(idx.empty());
  std::int64_t sum = 0;
  for (auto i : idx) sum += mixed[i];
  EXPECT_EQ(sum % 4, 0);
  const std::vector<std::int64_t> five{5};
  EXPECT_EQ(davenport_subsequence(five, 1), (std::vector<std::size_t>{0}));
  EXPECT_THROW(davenport_subsequence(mixed, 5), std::invalid_argument);
}

TEST(Davenport, AlwaysFindsOne) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < n; ++i) v.push_back(static_cast<std::int64_t>(rng() % 100) - 50);
    const auto idx = davenport_subsequence(v, n);
    ASSERT_FALSE(idx.empty());
    std::int64_t sum = 0;
    for (auto i : idx) sum += v[i];
    EXPECT_EQ(((sum % n) + n) % n, 0);
  }
}

TEST(Pumping, FindsRepeatedTriangles) {
  const auto matches = find_pumping_components(parse_encoding("*(+(*(v,v,v),*(v,v,v)),v,v)"), 3, 3);
  ASSERT_EQ(matches.size(), 1U);
  EXPECT_EQ(matches[0].summand, "*(v,v,v)");
  EXPECT_EQ(matches[0].copies, 2);
  EXPECT_EQ(matches[0].outside, 2);
  EXPECT_TRUE(matches[0].regular);
}
