#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "cograph/enumerator.hpp"
#include "cograph/oracle.hpp"

using namespace cograph;

namespace {

BicliqueSequence seq(std::vector<ExtInt> v) { return BicliqueSequence(std::move(v)); }

ExtremalSeries synthetic(std::int64_t value, int n_min, int n_max) {
  ExtremalSeries s{"synthetic", forbidden_biclique_profile(2, 2), std::nullopt, n_min, n_max, {}, {}};
  for (int n = n_min; n <= n_max; ++n) s.values[n] = value;
  return s;
}

bool contains(const std::vector<Cotree>& v, const char* enc) {
  return std::any_of(v.begin(), v.end(), [&](const Cotree& g) { return g.encoding() == enc; });
}

}  // namespace

TEST(Pareto, Examples) {
  auto smaller = pareto_filter({{seq({3, 1, 0}), 2}, {seq({3, 2, 1}), 2}});
  ASSERT_EQ(smaller.size(), 1U);
  EXPECT_EQ(smaller[0].first, seq({3, 1, 0}));

  auto trade = pareto_filter({{seq({3, 1, 0}), 2}, {seq({3, 2, 1}), 3}});
  EXPECT_EQ(trade.size(), 2U);

  auto dup = pareto_filter({{seq({3, 1, 0}), 2}, {seq({3, 1, 0}), 2}, {seq({3, 1, 0}), 2}});
  EXPECT_EQ(dup.size(), 1U);

  EXPECT_TRUE(pareto_filter({}).empty());
  EXPECT_THROW(pareto_filter({{seq({3, 1}), 2}, {seq({3, 1, 0}), 2}}), std::invalid_argument);
}

TEST(Registry, TwoVertexLevel) {
  const auto levels = build_registry(2, 2, std::nullopt, false);
  ASSERT_EQ(levels.size(), 2U);
  const auto& r2 = levels[1];
  EXPECT_TRUE(r2.frozen());
  ASSERT_EQ(r2.records().size(), 2U);
  // Keys ascend: (2,0,0) for E_2 before (2,1,0) for K_2.
  EXPECT_EQ(r2.records()[0].key, seq({2, 0, 0}));
  EXPECT_EQ(r2.records()[0].edges, 0);
  EXPECT_EQ(r2.records()[0].witnesses, std::vector<Cotree>{make_edgeless(2)});
  EXPECT_EQ(r2.records()[1].key, seq({2, 1, 0}));
  EXPECT_EQ(r2.records()[1].edges, 1);
  EXPECT_EQ(r2.records()[1].witnesses, std::vector<Cotree>{make_clique(2)});
}

TEST(Registry, RejectsBadInput) {
  Registry r(3, 2);
  EXPECT_THROW(r.add({seq({2, 1, 0}), 1, {make_clique(2)}}), std::invalid_argument);
  r.add({seq({3, 2, 1}), 3, {make_clique(3)}});
  // Not frozen yet.
  EXPECT_THROW(query(r, forbidden_biclique_profile(2, 2)), std::logic_error);
  r.freeze();
  EXPECT_THROW(r.add({seq({3, 0, 0}), 0, {make_edgeless(3)}}), std::logic_error);
  // K_3 is C_4-free but has a vertex of degree 2.
  EXPECT_EQ(query(r, forbidden_biclique_profile(2, 2))->edges, 3);
  EXPECT_FALSE(query(r, biclique_free_profile(1, 2)));
  // A cap-2 registry cannot answer a window-3 profile.
  EXPECT_THROW(query(r, forbidden_biclique_profile(3, 3)), std::invalid_argument);

  EXPECT_THROW(build_registry(0, 2, std::nullopt, false), std::invalid_argument);
  EXPECT_THROW(build_registry(3, kMaxCap + 1, std::nullopt, false), CapacityError);
}

TEST(Registry, CapacityErrorOnTooManyKeys) {
  BuildOptions opt;
  opt.n_max = 8;
  opt.cap = 4;
  opt.max_records = 10;
  EXPECT_THROW(build_registry(opt), CapacityError);
}

TEST(Query, Examples) {
  const auto levels = build_registry(5, 2, std::nullopt, false);
  const auto k1 = query(levels[0], forbidden_biclique_profile(2, 2));
  ASSERT_TRUE(k1);
  EXPECT_EQ(k1->edges, 0);
  EXPECT_EQ(k1->witnesses, std::vector<Cotree>{make_leaf()});

  const auto c22 = query(levels[4], forbidden_biclique_profile(2, 2));
  ASSERT_TRUE(c22);
  EXPECT_EQ(c22->edges, 6);

  // The profile of E_4 forbids every edge.
  const auto e4 = validate({4, 0, 0, 0, 0}, kNegInf);
  const auto none = query(levels[3], e4);
  ASSERT_TRUE(none);
  EXPECT_EQ(none->edges, 0);
  EXPECT_EQ(none->witnesses, std::vector<Cotree>{make_edgeless(4)});
}

TEST(Query, WitnessLimitTruncates) {
  const auto levels = build_registry(6, 3, std::nullopt, true);
  const auto all = query(levels[5], forbidden_biclique_profile(3, 3));
  const auto one = query(levels[5], forbidden_biclique_profile(3, 3), 1);
  ASSERT_TRUE(all && one);
  ASSERT_GT(all->witnesses.size(), 1U);
  ASSERT_EQ(one->witnesses.size(), 1U);
  EXPECT_EQ(one->witnesses[0], all->witnesses[0]);
}

TEST(ExtremalFunction, Examples) {
  EXPECT_EQ(extremal_function(2, 2, 5, 5).values.at(5), 6);
  const auto c33 = extremal_function(3, 3, 6, 8);
  EXPECT_EQ(c33.values.at(6), 12);
  EXPECT_EQ(c33.values.at(8), 19);
  EXPECT_TRUE(contains(c33.witnesses.at(8), "*(+(*(v,v,v),*(v,v,v)),v,v)"));
  EXPECT_EQ(c33.alpha, Rational(3));
  BuildOptions every;
  every.exhaustive = true;
  const auto all6 = extremal_function(3, 3, 6, 6, every);
  EXPECT_TRUE(contains(all6.witnesses.at(6), "*(+(*(v,v,v),v),v,v)"));
  // The octahedron ties.
  EXPECT_TRUE(contains(all6.witnesses.at(6), "*(+(v,v),+(v,v),+(v,v))"));
}

// Frozen from the brute-force oracle (see OracleAgreement below).
TEST(ExtremalFunction, FrozenSmallValues) {
  const std::vector<std::int64_t> c22 = {0, 1, 3, 4, 6, 7, 9, 10, 12};
  const std::vector<std::int64_t> c33 = {0, 1, 3, 6, 10, 12, 15, 19, 21};
  const auto s22 = extremal_function(2, 2, 1, 9);
  const auto s33 = extremal_function(3, 3, 1, 9);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(s22.values.at(n), c22[static_cast<std::size_t>(n - 1)]) << n;
    EXPECT_EQ(s33.values.at(n), c33[static_cast<std::size_t>(n - 1)]) << n;
  }
  // Below the biclique size everything is a clique.
  const auto small = extremal_function(3, 3, 1, 4);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(small.values.at(n), n * (n - 1) / 2);
}

TEST(ExtremalFunction, OracleAgreement) {
  const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  const auto catalogs = enumerate_cotrees_upto(7);
  for (auto [s, t] : pairs) {
    const auto series = extremal_function(s, t, 1, 7);
    for (int n = 1; n <= 7; ++n) {
      const auto brute = extremal_bruteforce(catalogs[static_cast<std::size_t>(n - 1)], biclique_free_profile(s, t));
      ASSERT_TRUE(brute);
      EXPECT_EQ(series.values.at(n), brute->edges) << "(" << s << "," << t << ") n=" << n;
      for (const auto& w : series.witnesses.at(n))
        EXPECT_TRUE(std::binary_search(brute->witnesses.begin(), brute->witnesses.end(), w)) << w.encoding();
    }
  }
}

TEST(ExtremalFunction, ExhaustiveWitnessesEqualOracleSets) {
  const auto catalogs = enumerate_cotrees_upto(6);
  BuildOptions opt;
  opt.exhaustive = true;
  for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
    const auto series = extremal_function(s, t, 1, 6, opt);
    for (int n = 1; n <= 6; ++n) {
      const auto brute = extremal_bruteforce(catalogs[static_cast<std::size_t>(n - 1)], biclique_free_profile(s, t));
      ASSERT_TRUE(brute);
      EXPECT_EQ(series.witnesses.at(n), brute->witnesses) << "(" << s << "," << t << ") n=" << n;
    }
  }
}

TEST(ExtremalFunction, ThreadCountDoesNotChangeResult) {
  BuildOptions one, four;
  four.threads = 4;
  const auto a = build_registry(options_for(forbidden_biclique_profile(3, 3), 14, one));
  const auto b = build_registry(options_for(forbidden_biclique_profile(3, 3), 14, four));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].records().size(), b[i].records().size());
    for (std::size_t k = 0; k < a[i].records().size(); ++k) {
      EXPECT_EQ(a[i].records()[k].key, b[i].records()[k].key);
      EXPECT_EQ(a[i].records()[k].edges, b[i].records()[k].edges);
      EXPECT_EQ(a[i].records()[k].witnesses, b[i].records()[k].witnesses);
    }
  }
}

TEST(ExtremalFunction, WitnessesAreExactAndFulfill) {
  const auto p = forbidden_biclique_profile(3, 4);
  const auto series = extremal_function(3, 4, 1, 20);
  for (const auto& [n, ex] : series.values)
    for (const auto& w : series.witnesses.at(n)) {
      EXPECT_EQ(w.vertex_count(), n);
      EXPECT_EQ(w.edge_count(), ex);
      EXPECT_TRUE(fulfills(biclique_sequence(w), p)) << w.encoding();
    }
}

TEST(Periodicity, MatchingFamily) {
  const auto series = extremal_function(2, 2, 4, 30);
  const auto rep = analyze_periodicity(series, Rational(3, 2));
  ASSERT_TRUE(rep.conclusive);
  EXPECT_EQ(rep.period, 2);
  EXPECT_EQ(rep.residues.at(0), Rational(-2));
  EXPECT_EQ(rep.residues.at(1), Rational(-3, 2));
  EXPECT_TRUE(rep.all_negative);
  EXPECT_TRUE(rep.strictly_below);
}

TEST(Periodicity, TriangleFamily) {
  const auto series = extremal_function(3, 3, 5, 30);
  const auto rep = analyze_periodicity(series, Rational(3));
  ASSERT_TRUE(rep.conclusive);
  EXPECT_EQ(rep.period, 3);
  EXPECT_EQ(rep.residues.at(0), Rational(-6));
  EXPECT_EQ(rep.residues.at(1), Rational(-6));
  EXPECT_EQ(rep.residues.at(2), Rational(-5));
  EXPECT_TRUE(rep.all_negative);
  ASSERT_TRUE(rep.slope);
  EXPECT_EQ(*rep.slope, Rational(3));
}

TEST(Periodicity, ConstantSeries) {
  const auto rep = analyze_periodicity(synthetic(4, 1, 12), Rational(0));
  ASSERT_TRUE(rep.conclusive);
  EXPECT_EQ(rep.period, 1);
  EXPECT_EQ(rep.residues.at(0), Rational(4));

  const auto zero = analyze_periodicity(synthetic(0, 1, 12), Rational(0));
  ASSERT_TRUE(zero.conclusive);
  EXPECT_EQ(zero.residues.at(0), Rational(0));
  EXPECT_FALSE(zero.all_negative);
  EXPECT_FALSE(zero.strictly_below);
}

TEST(Periodicity, TooShortIsInconclusive) {
  ExtremalSeries s = synthetic(0, 1, 2);
  s.values = {{1, 0}, {2, 5}};
  EXPECT_FALSE(analyze_periodicity(s, Rational(1), {2}).conclusive);
}
