#include <gtest/gtest.h>

#include "hgreedy/generators.hpp"
#include "hgreedy/girth.hpp"
#include "hgreedy/io.hpp"
#include "test_support.hpp"

using namespace hgreedy;
using namespace hgreedy::testing;

TEST(Tree, Examples) {
  EXPECT_EQ(make_tree({1, 3, 0, TreeVariant::full}).graph().num_vertices(), 1u);

  const auto star = make_tree({1, 2, 1, TreeVariant::full});
  EXPECT_EQ(star.graph().num_vertices(), 3u);
  EXPECT_EQ(star.graph().num_edges(), 2u);

  const auto t = make_tree({1, 2, 2, TreeVariant::root_heavy});
  EXPECT_EQ(t.graph().num_vertices(), 5u);
  EXPECT_EQ(t.descending_edges(t.root()).size(), 2u);
  EXPECT_EQ(degree_profile(t.graph()).degrees[1], 2u);
}

TEST(Tree, ShapeInvariants) {
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 3; ++d) {
      for (int h = 0; h <= 3; ++h) {
        for (auto variant : {TreeVariant::full, TreeVariant::root_heavy}) {
          const auto t = make_tree({r, d, h, variant});
          const auto& g = t.graph();
          EXPECT_TRUE(is_linear(g));
          EXPECT_TRUE(berge_girth(g).acyclic());
          EXPECT_EQ(g.uniformity().value_or(static_cast<std::size_t>(r + 1)), static_cast<std::size_t>(r + 1));
          std::size_t expected_n = 1, level = 1;
          for (int k = 1; k <= h; ++k) {
            const std::size_t fan = (variant == TreeVariant::full || k == 1) ? d : d - 1;
            level *= fan * r;
            expected_n += level;
          }
          EXPECT_EQ(g.num_vertices(), expected_n);
          if (variant == TreeVariant::full) EXPECT_EQ(full_tree_size(d, r, h), expected_n);
          std::size_t desc_total = 0;
          for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto desc = t.descending_edges(v).size();
            desc_total += desc;
            if (t.depth(v) == static_cast<std::size_t>(h)) {
              EXPECT_EQ(desc, 0u);
            } else if (v == t.root() || variant == TreeVariant::full) {
              EXPECT_EQ(desc, static_cast<std::size_t>(d));
            } else {
              EXPECT_EQ(desc, static_cast<std::size_t>(d - 1));
            }
            EXPECT_EQ(t.ascending_edge(v).has_value(), v != t.root());
          }
          EXPECT_EQ(desc_total, g.num_edges());
        }
      }
    }
  }
}

TEST(Tree, InvalidSpec) {
  EXPECT_THROW(make_tree({0, 1, 1, TreeVariant::full}), std::invalid_argument);
  EXPECT_THROW(make_tree({1, 0, 1, TreeVariant::full}), std::invalid_argument);
  EXPECT_THROW(make_tree({1, 1, -1, TreeVariant::full}), std::invalid_argument);
}

TEST(LoosePath, Examples) {
  const auto p1 = make_loose_path(1, 2);
  EXPECT_EQ(p1.graph.num_vertices(), 3u);
  EXPECT_EQ(p1.graph.edges(), (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
  const auto p2 = make_loose_path(2, 2);
  EXPECT_EQ(p2.graph.edges(), (std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(p2.last, 4u);
  EXPECT_TRUE(berge_girth(make_loose_path(2, 3).graph).acyclic());
  EXPECT_THROW(make_loose_path(0, 2), std::invalid_argument);
}

TEST(LooseCycle, GirthMatchesLength) {
  EXPECT_EQ(make_loose_berge_cycle(1, 5), (Hypergraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})));
  for (int r = 1; r <= 3; ++r) {
    for (int k = 3; k <= 8; ++k) {
      const auto g = make_loose_berge_cycle(r, k);
      EXPECT_EQ(g.num_vertices(), static_cast<std::size_t>(k * r));
      EXPECT_EQ(berge_girth(g).girth, static_cast<std::size_t>(k));
      EXPECT_TRUE(degree_profile(g).max_degree == 2u);
    }
  }
  EXPECT_EQ(brute_force_girth(make_loose_berge_cycle(2, 4)), 4u);
  EXPECT_EQ(berge_girth(make_loose_berge_cycle(2, 2)).girth, 2u);
  EXPECT_THROW(make_loose_berge_cycle(1, 2), std::invalid_argument);
  EXPECT_THROW(make_loose_berge_cycle(1, 1), std::invalid_argument);
}

TEST(RandomLinear, InvariantsAndDeterminism) {
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 4; ++d) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = random_linear_bounded_degree(r, d, 60, seed);
        EXPECT_TRUE(is_linear(g));
        EXPECT_LE(degree_profile(g).max_degree, static_cast<std::size_t>(d));
        EXPECT_EQ(g.uniformity().value_or(r + 1), static_cast<std::size_t>(r + 1));
        EXPECT_GT(g.num_edges(), 0u);
        EXPECT_EQ(to_text(g), to_text(random_linear_bounded_degree(r, d, 60, seed)));
      }
    }
  }
  EXPECT_THROW(random_linear_bounded_degree(2, 2, 2, 1), std::invalid_argument);
}

TEST(RandomRegular, CubicGirthFive) {
  const auto s = random_regular_girth(1, 3, 10, 5, 42);
  const auto p = degree_profile(s.graph);
  EXPECT_TRUE(p.is_regular);
  EXPECT_EQ(p.max_degree, 3u);
  EXPECT_GE(berge_girth(s.graph).girth.value_or(1000), 5u);
  EXPECT_EQ(graph_girth(s.graph), 5u);  // (3,5)-cage is unique: Petersen
  EXPECT_EQ(to_text(s.graph), to_text(random_regular_girth(1, 3, 10, 5, 42).graph));
}

TEST(RandomRegular, ThreeUniformLinear) {
  const auto s = random_regular_girth(2, 2, 12, 3, 7);
  EXPECT_TRUE(degree_profile(s.graph).is_regular);
  EXPECT_EQ(degree_profile(s.graph).max_degree, 2u);
  EXPECT_EQ(s.graph.uniformity(), 3u);
  EXPECT_TRUE(is_linear(s.graph));
}

TEST(RandomRegular, Errors) {
  EXPECT_THROW(random_regular_girth(2, 2, 10, 3, 1), std::invalid_argument);
  // No cubic graph on 6 vertices has girth 5.
  EXPECT_THROW(random_regular_girth(1, 3, 6, 5, 1, 200), GenerationFailure);
}
