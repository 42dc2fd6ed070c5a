#include <gtest/gtest.h>

#include <sstream>

#include "hgreedy/generators.hpp"
#include "hgreedy/girth.hpp"
#include "hgreedy/hypergraph.hpp"
#include "hgreedy/io.hpp"
#include "test_support.hpp"

using namespace hgreedy;
using namespace hgreedy::testing;

TEST(Load, SingleThreeEdge) {
  const auto g = load_hypergraph("p hg 3 1\ne 0 1 2\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.uniformity(), 3u);
}

TEST(Load, TriangleWithComments) {
  const auto g = load_hypergraph("# triangle\np hg 3 3\ne 0 1\n\ne 1 2\n# x\ne 0 2\n");
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.uniformity(), 2u);
}

TEST(Load, MixedSizesHaveNoUniformity) {
  const auto g = load_hypergraph("p hg 4 2\ne 0 1\ne 1 2 3\n");
  EXPECT_FALSE(g.uniformity().has_value());
}

TEST(Load, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      load_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p hg 3 1\ne 0 0 1\n"), 2u);       // repeated vertex
  EXPECT_EQ(line_of("p hg 3 1\ne 0 3\n"), 2u);         // out of range
  EXPECT_EQ(line_of("p hg 3 2\ne 0 1\ne 1 0\n"), 3u);  // duplicate edge
  EXPECT_EQ(line_of("p hg x 1\n"), 1u);
  EXPECT_EQ(line_of("p graph 3 1\n"), 1u);
  EXPECT_EQ(line_of("e 0 1\n"), 1u);
  EXPECT_EQ(line_of("p hg 3 1\ne 0\n"), 2u);
  EXPECT_EQ(line_of("p hg 3 1\nq 0 1\n"), 2u);
  EXPECT_NE(line_of("p hg 3 2\ne 0 1\n"), 0u);  // edge count mismatch
  EXPECT_NE(line_of(""), 0u);
}

TEST(Load, RoundTripIsCanonical) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_hypergraph(9, 7, 4, seed);
    const auto text = to_text(g);
    const auto back = load_hypergraph(text);
    EXPECT_EQ(to_text(back), text);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(back.num_edges(), g.num_edges());
  }
}

TEST(Hypergraph, ConstructorRejectsInvariantViolations) {
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{0, 0, 1}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{0}}), HypergraphError);
}

TEST(DegreeProfile, Examples) {
  auto p = degree_profile(single_edge3());
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_TRUE(p.is_regular);

  p = degree_profile(triangle());
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(p.max_degree, 2u);
  EXPECT_TRUE(p.is_regular);

  p = degree_profile(loose_path2());
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{1, 1, 2, 1, 1}));
  EXPECT_FALSE(p.is_regular);
  EXPECT_EQ(p.max_degree, 2u);
}

TEST(Linearity, Examples) {
  EXPECT_TRUE(is_linear(loose_path2()));
  EXPECT_FALSE(is_linear(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})));
  EXPECT_TRUE(is_linear(Hypergraph(4, {})));
}

TEST(Girth, SharedPairIsTwo) {
  const Hypergraph g(4, {{0, 1, 2}, {0, 1, 3}});
  const auto res = berge_girth(g);
  ASSERT_EQ(res.girth, 2u);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(validate_berge_cycle(g, *res.witness));
}

TEST(Girth, LooseFiveCycle) {
  const auto g = make_loose_berge_cycle(2, 5);
  EXPECT_EQ(g.num_vertices(), 10u);
  EXPECT_EQ(g.num_edges(), 5u);
  EXPECT_EQ(brute_force_girth(g), 5u);
  const auto res = berge_girth(g);
  ASSERT_EQ(res.girth, 5u);
  EXPECT_TRUE(validate_berge_cycle(g, *res.witness));
}

TEST(Girth, SingleEdgeIsAcyclic) {
  EXPECT_TRUE(berge_girth(single_edge3()).acyclic());
  EXPECT_TRUE(berge_girth(loose_path2()).acyclic());
  EXPECT_TRUE(berge_girth(Hypergraph(2, {})).acyclic());
}

TEST(Girth, PetersenIsFive) {
  const auto g = petersen();
  EXPECT_EQ(brute_force_girth(g), 5u);
  EXPECT_EQ(graph_girth(g), 5u);
  const auto res = berge_girth(g);
  ASSERT_EQ(res.girth, 5u);
  EXPECT_TRUE(validate_berge_cycle(g, *res.witness));
}

TEST(Girth, MatchesBruteForceOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = random_hypergraph(7, 1 + seed % 6, 3 + seed % 2, seed);
    const auto res = berge_girth(g);
    EXPECT_EQ(res.girth, brute_force_girth(g)) << to_text(g);
    EXPECT_EQ(res.girth == 2u, !is_linear(g));
    if (res.witness) {
      EXPECT_EQ(res.witness->length(), *res.girth);
      EXPECT_TRUE(validate_berge_cycle(g, *res.witness));
    }
  }
}

TEST(Girth, GraphGirthAgreesForRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_hypergraph(9, 4 + seed % 9, 2, seed);
    EXPECT_EQ(berge_girth(g).girth, graph_girth(g)) << to_text(g);
  }
}

TEST(Girth, WitnessValidatorRejectsBadCycles) {
  const auto g = make_loose_berge_cycle(1, 4);
  EXPECT_FALSE(validate_berge_cycle(g, {{0, 1, 2}, {0, 1, 1}}));
  EXPECT_FALSE(validate_berge_cycle(g, {{0, 2, 1, 3}, {0, 1, 2, 3}}));
  EXPECT_TRUE(validate_berge_cycle(g, {{0, 1, 2, 3}, {0, 1, 2, 3}}));
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(petersen(), 4, 0), (std::vector<Vertex>{4}));
  EXPECT_EQ(neighborhood(single_edge3(), 0, 1), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(neighborhood(loose_path2(), 0, 1), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(neighborhood(loose_path2(), 0, 2), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_THROW(neighborhood(triangle(), 3, 1), HypergraphError);
}

TEST(Neighborhood, MonotoneAndStabilizesAtComponent) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_hypergraph(12, 5, 3, seed);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<Vertex> prev{v};
      for (std::size_t h = 0; h <= g.num_vertices(); ++h) {
        const auto cur = neighborhood(g, v, h);
        EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = cur;
      }
      const auto dist = edge_distances(g, v);
      std::vector<Vertex> component;
      for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (dist[x] != std::numeric_limits<std::size_t>::max()) component.push_back(x);
      }
      EXPECT_EQ(prev, component);
    }
  }
}

TEST(Neighborhood, PathVariantAgreesOnTreesAndHighGirth) {
  const auto tree = make_tree({2, 2, 3, TreeVariant::full});
  for (Vertex v : {Vertex{0}, Vertex{3}, Vertex{9}}) {
    for (std::size_t h = 0; h <= 4; ++h) {
      EXPECT_EQ(neighborhood(tree.graph(), v, h), path_neighborhood(tree.graph(), v, h));
    }
  }
  // Girth 9 > 2h+1 for h <= 3.
  const auto cyc = make_loose_berge_cycle(2, 9);
  for (std::size_t h = 0; h <= 3; ++h) {
    EXPECT_EQ(neighborhood(cyc, 0, h), path_neighborhood(cyc, 0, h));
  }
}

TEST(Neighborhood, PathVariantCanBeSmallerWithShortCycles) {
  // Two 3-edges sharing {0,1}: from 0 every vertex is one edge away, but the
  // only loose paths of length 2 would need edges meeting in one vertex.
  const Hypergraph g(4, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_EQ(neighborhood(g, 2, 1), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(neighborhood(g, 2, 2), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(path_neighborhood(g, 2, 2), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Induced, Examples) {
  const Vertex s01[] = {0, 1};
  auto sub = induced_subhypergraph(triangle(), s01);
  ASSERT_EQ(sub.graph.num_edges(), 1u);
  EXPECT_EQ(sub.graph.edges()[0], (std::vector<Vertex>{0, 1}));

  sub = induced_subhypergraph(single_edge3(), s01);
  EXPECT_EQ(sub.graph.num_edges(), 0u);

  const Vertex bad[] = {0, 7};
  EXPECT_THROW(induced_subhypergraph(triangle(), bad), HypergraphError);
}

TEST(Induced, FullVertexSetIsIdentity) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_hypergraph(8, 6, 4, seed);
    const auto all = iota_ranking(g.num_vertices());
    const auto sub = induced_subhypergraph(g, all);
    EXPECT_EQ(sub.graph, g);
    EXPECT_EQ(sub.to_parent, all);
  }
}

TEST(Independent, Examples) {
  const Vertex s01[] = {0, 1};
  const Vertex s012[] = {0, 1, 2};
  EXPECT_TRUE(is_independent(single_edge3(), s01));
  EXPECT_FALSE(is_independent(single_edge3(), s012));
  EXPECT_TRUE(is_independent(single_edge3(), std::span<const Vertex>{}));
}
