#include <random>
#include <string>

#include <gtest/gtest.h>

#include "cograph/checks.hpp"
#include "cograph/io.hpp"

using namespace cograph;

namespace {

std::string error_location(const std::string& text) {
  try {
    parse_cotree_json(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST(CotreeJson, Shape) {
  const auto j = cotree_to_json(parse_encoding("*(+(v,v),v)"));
  EXPECT_EQ(j.dump(), R"({"children":[{"children":[{"op":"leaf"},{"op":"leaf"}],"op":"sum"},{"op":"leaf"}],"op":"prod"})");
}

TEST(CotreeJson, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_cotree(1 + static_cast<std::int64_t>(rng() % 20), rng);
    const std::string once = cotree_to_json(g).dump();
    const auto back = parse_cotree_json(once);
    EXPECT_EQ(back, g);
    EXPECT_EQ(cotree_to_json(back).dump(), once);
  }
}

TEST(CotreeJson, ChildOrderIsCanonicalized) {
  const auto a = parse_cotree_json(R"({"op":"sum","children":[{"op":"leaf"},{"op":"prod","children":[{"op":"leaf"},{"op":"leaf"}]}]})");
  EXPECT_EQ(a.encoding(), "+(*(v,v),v)");
}

TEST(CotreeJson, ErrorsCarryAJsonPointer) {
  EXPECT_EQ(error_location(R"({"op":"sum","children":[{"op":"leaf"}]})"), "/children");
  EXPECT_EQ(error_location(R"({"op":"sum","children":[{"op":"leaf"},{"op":"sum","children":[{"op":"leaf"},{"op":"leaf"}]}]})"),
            "/children/1");
  EXPECT_EQ(error_location(R"({"op":"prod","children":[{"op":"leaf"},{"op":"lea"}]})"), "/children/1/op");
  EXPECT_EQ(error_location(R"({"op":"prod","children":[{"op":"leaf"},{"nope":1}]})"), "/children/1");
  EXPECT_EQ(error_location(R"({"op":"leaf","children":[]})"), "/");
  EXPECT_EQ(error_location("[1,2]"), "/");
  EXPECT_EQ(error_location(R"({"op":)"), "byte 7");
}

TEST(CotreeJson, AcceptsEncodingsToo) {
  EXPECT_EQ(parse_cotree_any("  *(v,v)\n"), make_clique(2));
  EXPECT_EQ(parse_cotree_any(R"({"op":"leaf"})"), make_leaf());
  EXPECT_THROW(parse_cotree_any("   "), ParseError);
}

TEST(Dot, LabelsAndRoot) {
  const auto dot = to_dot(parse_encoding("*(+(v,v),v)"));
  EXPECT_EQ(dot,
            "graph cotree {\n"
            "  node [shape=circle];\n"
            "  n0 [label=\"×\", style=filled, fillcolor=\"#b39ddb\"];\n"
            "  n1 [label=\"+\"];\n"
            "  n2 [label=\"0\"];\n"
            "  n1 -- n2;\n"
            "  n3 [label=\"1\"];\n"
            "  n1 -- n3;\n"
            "  n0 -- n1;\n"
            "  n4 [label=\"2\"];\n"
            "  n0 -- n4;\n"
            "}\n");
}

TEST(Snapshot, RoundTrip) {
  const auto levels = build_registry(7, 3, forbidden_biclique_profile(3, 3), false);
  const auto j = registry_to_json(levels);
  EXPECT_EQ(j["format"], kSnapshotFormat);
  const auto back = registry_from_json(j);
  ASSERT_EQ(back.size(), levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    EXPECT_TRUE(back[i].frozen());
    ASSERT_EQ(back[i].records().size(), levels[i].records().size());
    for (std::size_t k = 0; k < levels[i].records().size(); ++k) {
      EXPECT_EQ(back[i].records()[k].key, levels[i].records()[k].key);
      EXPECT_EQ(back[i].records()[k].edges, levels[i].records()[k].edges);
      EXPECT_EQ(back[i].records()[k].witnesses, levels[i].records()[k].witnesses);
    }
  }
  EXPECT_EQ(registry_to_json(back), j);
}

TEST(Snapshot, RejectsForeignDocuments) {
  EXPECT_THROW(registry_from_json(nlohmann::json::object()), ParseError);
  EXPECT_THROW(registry_from_json({{"format", kSnapshotFormat}}), ParseError);
}

TEST(Series, CsvColumns) {
  const auto s = extremal_function(2, 2, 4, 6);
  EXPECT_EQ(series_to_csv(s).substr(0, series_to_csv(s).find('\n')), "n,ex,alpha*n,residue,below,witness");
  const auto csv = series_to_csv(s);
  EXPECT_NE(csv.find("\n5,6,15/2,-3/2,true,\""), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n4,4,6,-2,true,\""), std::string::npos) << csv;
}

TEST(Series, JsonRoundTrip) {
  const auto s = extremal_function(3, 3, 2, 10);
  const auto j = series_to_json(s);
  const auto back = series_from_json(j);
  EXPECT_EQ(back.values, s.values);
  EXPECT_EQ(back.alpha, s.alpha);
  EXPECT_EQ(back.profile, s.profile);
  EXPECT_EQ(series_to_json(back), j);
  EXPECT_THROW(series_from_json(nlohmann::json::object()), ParseError);
}

TEST(Series, PeriodicityJson) {
  const auto s = extremal_function(2, 2, 4, 30);
  const auto j = periodicity_to_json(analyze_periodicity(s, Rational(3, 2)));
  EXPECT_EQ(j["status"], "periodic");
  EXPECT_EQ(j["period"], 2);
  EXPECT_EQ(j["residues"]["0"], "-2");
  EXPECT_EQ(j["residues"]["1"], "-3/2");
  EXPECT_EQ(j["all_negative"], true);
}
