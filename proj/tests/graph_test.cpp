#include <gtest/gtest.h>

#include "graphicahedron/graph.hpp"
#include "oracles.hpp"

using namespace graphicahedron;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::internal_inconsistency;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

/// |Aut(G)| by filtering all of S_p.
std::size_t brute_automorphism_count(const SimpleGraph& g) {
  const auto edges = oracle::edge_list(g);
  auto sorted = [](oracle::EdgeList e) {
    for (auto& [a, b] : e) {
      if (a > b) std::swap(a, b);
    }
    std::sort(e.begin(), e.end());
    return e;
  };
  const auto target = sorted(edges);
  std::size_t count = 0;
  for (const auto& s : oracle::symmetric_group(static_cast<int>(g.vertex_count()))) {
    oracle::EdgeList mapped;
    for (auto [a, b] : edges) mapped.emplace_back(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
    count += sorted(mapped) == target;
  }
  return count;
}

const char* kPresets[] = {"path:1", "path:2", "path:3", "path:4", "cycle:3", "cycle:4",
                          "star:3", "star:4", "paw", "fork"};

}  // namespace

TEST(Parse, EdgeListWithHeaderAndComments) {
  const auto g = parse_graph("# triangle plus pendant\np 5\n1 2\n2 3  # second\n\n3 1\n");
  EXPECT_EQ(g.vertex_count(), 5U);
  ASSERT_EQ(g.edge_count(), 3U);
  EXPECT_EQ(g.edge(2), (Edge{0, 2}));
}

TEST(Parse, VertexCountDefaultsToLargestLabel) {
  EXPECT_EQ(parse_graph("1 2\n2 4\n").vertex_count(), 4U);
}

TEST(Parse, Rejections) {
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 2\n2 1\n"); }), ErrorKind::parse);
  EXPECT_EQ(message_of([] { (void)parse_graph("1 2\n2 1\n"); }), "line 2: duplicate edge (first given on line 1)");
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 1\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("0 1\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 x\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 2 3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("p 2\n1 3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 2\np 3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("# nothing\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_graph("1 2\n2 \xc3\xa9\n"); }), ErrorKind::parse);
  EXPECT_EQ(message_of([] { (void)parse_graph("1 2\n\n3 3\n"); }), "line 3: loop edge at vertex 3");
}

TEST(Parse, InlineEdges) {
  const auto g = parse_inline_edges("1-2,2-3");
  EXPECT_EQ(g, preset_graph("path", 2));
  EXPECT_EQ(kind_of([] { (void)parse_inline_edges("1-2,1-2"); }), ErrorKind::parse);
  EXPECT_EQ(message_of([] { (void)parse_inline_edges("1-2,1-2"); }), "edge 2: duplicate edge (first given as edge 1)");
  EXPECT_EQ(kind_of([] { (void)parse_inline_edges("1-2,23"); }), ErrorKind::parse);
}

TEST(Presets, Shapes) {
  EXPECT_EQ(preset_graph("path", 3), SimpleGraph::from_one_based(4, {{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(preset_graph("cycle", 4), SimpleGraph::from_one_based(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_EQ(preset_graph("star", 3), SimpleGraph::from_one_based(4, {{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(parse_preset("paw"), SimpleGraph::from_one_based(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
  EXPECT_EQ(parse_preset("fork"), SimpleGraph::from_one_based(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}));
  EXPECT_EQ(parse_preset("star:1"), parse_preset("path:1"));
}

TEST(Presets, Rejections) {
  EXPECT_EQ(kind_of([] { (void)parse_preset("cycle:2"); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { (void)parse_preset("path"); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { (void)parse_preset("paw:3"); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { (void)parse_preset("wheel:5"); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { (void)parse_preset("path:x"); }), ErrorKind::parse);
}

TEST(Graph, ConstructorRejections) {
  EXPECT_EQ(kind_of([] { SimpleGraph(3, {{0, 0}}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { SimpleGraph(3, {{0, 1}, {1, 0}}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { SimpleGraph(3, {{0, 3}}); }), ErrorKind::invalid_argument);
}

TEST(Graph, Connectivity) {
  for (const char* name : kPresets) EXPECT_TRUE(is_connected(parse_preset(name))) << name;
  EXPECT_FALSE(is_connected(parse_inline_edges("1-2,3-4")));
  EXPECT_FALSE(is_connected(parse_graph("p 3\n1 2\n")));
  EXPECT_TRUE(is_connected(parse_graph("p 1\n")));
}

TEST(Graph, ComponentsMatchRelaxationOracle) {
  for (const char* name : kPresets) {
    const auto g = parse_preset(name);
    const auto edges = oracle::edge_list(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto labels = oracle::component_labels(static_cast<int>(g.vertex_count()), edges, m);
      EXPECT_EQ(components(g, EdgeSubset(m)), VertexPartition::from_labels(labels)) << name << " mask " << m;
    }
  }
}

TEST(Graph, ComponentsExamples) {
  const auto paw = parse_preset("paw");
  EXPECT_EQ(components(paw, EdgeSubset()).block_count(), 4U);
  EXPECT_EQ(components(paw, EdgeSubset::of({0, 1})).to_string(), "{1,2,3}{4}");
  EXPECT_EQ(components(paw, paw.all_edges()).block_count(), 1U);
}

TEST(Graph, AutomorphismCountsMatchBruteForce) {
  const std::pair<const char*, std::size_t> expected[] = {
      {"path:1", 2}, {"path:2", 2}, {"path:3", 2}, {"path:4", 2}, {"cycle:3", 6},
      {"cycle:4", 8}, {"star:3", 6}, {"star:4", 24}, {"paw", 2}, {"fork", 2}};
  for (auto [name, count] : expected) {
    const auto g = parse_preset(name);
    const auto auts = automorphisms(g);
    EXPECT_EQ(auts.size(), brute_automorphism_count(g)) << name;
    EXPECT_EQ(auts.size(), count) << name;
    EXPECT_TRUE(auts.front().vertex_map.is_identity());
    for (const auto& k : auts) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        EXPECT_EQ(g.edge_index(k.vertex_map(ed.u), k.vertex_map(ed.v)), k.edge_map(e));
      }
    }
  }
}

// k tau_e k^-1 = tau_{k(e)} for every automorphism k and edge e.
TEST(Graph, ConjugationIdentity) {
  for (const char* name : kPresets) {
    const auto g = parse_preset(name);
    if (g.vertex_count() > 5) continue;
    for (const auto& k : automorphisms(g)) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        EXPECT_EQ(conjugate(g.transposition(e), k.vertex_map), g.transposition(k.edge_map(e))) << name;
      }
    }
  }
}

TEST(Graph, Isomorphism) {
  EXPECT_TRUE(are_isomorphic(parse_preset("star:1"), parse_preset("path:1")));
  EXPECT_TRUE(are_isomorphic(parse_inline_edges("2-3,1-2,3-4"), parse_preset("path:3")));
  EXPECT_FALSE(are_isomorphic(parse_preset("path:3"), parse_preset("star:3")));
  EXPECT_FALSE(are_isomorphic(parse_preset("paw"), parse_preset("cycle:4")));
}

TEST(Graph, ComponentSubgraph) {
  const auto fork = parse_preset("fork");
  const auto k = EdgeSubset::of({0, 2, 3});
  const auto part = components(fork, k);
  ASSERT_EQ(part.block_count(), 2U);
  EXPECT_EQ(component_subgraph(fork, k, part.blocks()[0]), parse_preset("path:1"));
  EXPECT_TRUE(are_isomorphic(component_subgraph(fork, k, part.blocks()[1]), parse_preset("path:2")));
}
