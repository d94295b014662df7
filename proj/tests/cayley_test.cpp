#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "graphicahedron/cayley.hpp"
#include "graphicahedron/coset.hpp"
#include "oracles.hpp"

using namespace graphicahedron;

TEST(Cayley, HexagonFromPathOfTwoEdges) {
  const auto c = build_cayley(parse_preset("path:2"));
  EXPECT_EQ(c.vertex_count(), 6U);
  EXPECT_EQ(c.edges().size(), 6U);
  std::set<std::size_t> colors;
  for (const auto& e : c.edges()) colors.insert(e.color);
  EXPECT_EQ(colors.size(), 2U);
  for (std::uint64_t v = 0; v < 6; ++v) {
    for (std::size_t e = 0; e < 2; ++e) EXPECT_EQ(c.neighbor(c.neighbor(v, e), e), v);
  }
}

TEST(Cayley, EdgesJoinAlphaAndTauAlpha) {
  const auto g = parse_preset("paw");
  const auto c = build_cayley(g);
  EXPECT_EQ(c.edges().size(), c.vertex_count() * g.edge_count() / 2);
  for (const auto& e : c.edges()) {
    EXPECT_LT(e.a, e.b);
    EXPECT_EQ(compose(g.transposition(e.color), c.vertex(e.a)), c.vertex(e.b));
  }
}

// The Cayley graph is connected exactly when G is: every graph on 4 labelled vertices.
TEST(Cayley, ConnectedIffGraphConnected) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) all.emplace_back(a, b);
  }
  for (std::uint64_t mask = 0; mask < (1U << all.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(all[i]);
    }
    const SimpleGraph g(4, edges);
    EXPECT_EQ(is_connected(build_cayley(g)), is_connected(g)) << "mask " << mask;
  }
}

TEST(Cayley, ComponentOfIsTheBruteForceCoset) {
  for (const char* name : {"path:3", "cycle:3", "paw", "star:3"}) {
    const auto g = parse_preset(name);
    const auto edges = oracle::edge_list(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto labels = oracle::component_labels(static_cast<int>(g.vertex_count()), edges, m);
      const auto subgroup = oracle::young_subgroup(labels);
      for_each_permutation(g.vertex_count(), [&](const Permutation& a) {
        if (a.lex_rank() % 5 != 0) return;
        const auto comp = component_of(g, EdgeSubset(m), a);
        const auto expected = oracle::coset(subgroup, a.images());
        ASSERT_EQ(comp.size(), expected.size());
        std::size_t i = 0;
        for (const auto& img : expected) EXPECT_EQ(comp[i++].images(), img);
        EXPECT_EQ(comp.size(), coset_size(components(g, EdgeSubset(m))));
      });
    }
  }
}

TEST(Cayley, DotExport) {
  const auto dot = export_dot(build_cayley(parse_preset("path:2")));
  const std::regex node(R"(\n  v\d+ \[label=)"), edge(R"( -- )");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()), 6);
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator()), 6);
  EXPECT_NE(dot.find("color=\"red\""), std::string::npos);
  EXPECT_NE(dot.find("color=\"blue\""), std::string::npos);
  EXPECT_EQ(dot, export_dot(build_cayley(parse_preset("path:2"))));
  EXPECT_EQ(dot.rfind("graph cayley {", 0), 0U);
}

TEST(Cayley, Capacity) {
  try {
    (void)build_cayley(parse_preset("path:8"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}
