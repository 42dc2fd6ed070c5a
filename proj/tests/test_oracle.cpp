#include <gtest/gtest.h>

#include "hgreedy/generators.hpp"
#include "hgreedy/oracle.hpp"
#include "hgreedy/theory.hpp"
#include "test_support.hpp"

using namespace hgreedy;
using namespace hgreedy::testing;

namespace {

// Independence number by plain subset scan.
std::size_t alpha_by_subsets(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return mask >> v & 1u; })) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST(ExactStats, Examples) {
  auto s = exact_greedy_stats(triangle());
  EXPECT_EQ(s.expected_size, Rational(1));
  for (const auto& p : s.selection_prob) EXPECT_EQ(p, Rational(1, 3));
  EXPECT_EQ(s.permutations, 6);

  s = exact_greedy_stats(single_edge3());
  EXPECT_EQ(s.expected_size, Rational(2));
  for (const auto& p : s.selection_prob) EXPECT_EQ(p, Rational(2, 3));

  const auto star = make_tree({1, 2, 1, TreeVariant::full});
  EXPECT_EQ(exact_greedy_stats(star.graph()).selection_prob[star.root()], Rational(1, 3));

  EXPECT_EQ(exact_greedy_stats(complete_graph(4)).expected_size, Rational(1));
}

TEST(ExactStats, SumsAndWorkerIndependence) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_hypergraph(7, 3 + seed % 6, 3, seed);
    const auto a = exact_greedy_stats(g, 1);
    const auto b = exact_greedy_stats(g, 4);
    Rational total(0);
    for (const auto& p : a.selection_prob) {
      total += p;
      EXPECT_GE(p, Rational(0));
      EXPECT_LE(p, Rational(1));
      EXPECT_EQ(a.permutations % p.denominator(), 0);
    }
    EXPECT_EQ(total, a.expected_size);
    EXPECT_EQ(a.expected_size, b.expected_size);
    EXPECT_EQ(a.selection_prob, b.selection_prob);
  }
}

TEST(ExactStats, Refusal) {
  EXPECT_THROW(exact_greedy_stats(Hypergraph(11, {})), OracleRefusal);
  EXPECT_NO_THROW(exact_greedy_stats(Hypergraph(8, {{0, 1}})));
}

TEST(ExactStats, DominatesCaroTuzaOnRegularInstances) {
  const std::vector<std::pair<Hypergraph, int>> cases{
      {make_loose_berge_cycle(1, 5), 2}, {make_loose_berge_cycle(1, 8), 2}, {complete_graph(4), 3},
      {fano_plane(), 3}, {petersen(), 3}};
  for (const auto& [g, d] : cases) {
    const int r = static_cast<int>(*g.uniformity()) - 1;
    EXPECT_GE(exact_greedy_stats(g).expected_size,
              caro_tuza_exact(d, r) * Rational(static_cast<std::int64_t>(g.num_vertices())));
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(exact_alpha(triangle()).alpha, 1u);
  EXPECT_EQ(exact_alpha(single_edge3()).alpha, 2u);
  // Loose 5-cycle with 3-edges: the 5 private vertices are free and the 5
  // junctions need a hitting set of size 3, so alpha = 10 - 3.
  const auto c5 = make_loose_berge_cycle(2, 5);
  const auto res = exact_alpha(c5);
  EXPECT_EQ(res.alpha, 7u);
  EXPECT_EQ(alpha_by_subsets(c5), 7u);
  EXPECT_TRUE(is_independent(c5, res.witness));
  EXPECT_THROW(exact_alpha(Hypergraph(25, {})), OracleRefusal);
}

TEST(Alpha, MatchesSubsetScan) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_hypergraph(10, 3 + seed % 12, 2 + seed % 3, seed);
    const auto res = exact_alpha(g);
    EXPECT_EQ(res.alpha, alpha_by_subsets(g));
    EXPECT_EQ(res.witness.size(), res.alpha);
    EXPECT_TRUE(is_independent(g, res.witness));
    // Greedy never beats alpha.
    EXPECT_LE(greedy_uniform(g, seed).selected.size(), res.alpha);
  }
}

TEST(IncreasingAssignments, Examples) {
  EXPECT_EQ(count_increasing_assignments(2, 1), 2);
  EXPECT_EQ(count_increasing_assignments(2, 2), 8);
  EXPECT_EQ(count_increasing_assignments(1, 3), 1);
  for (int r = 1; r <= 9; ++r) {
    for (int l = 1; l * r + 1 <= 9; ++l) {
      std::int64_t prod = 1;
      for (int k = 1; k <= l; ++k) prod *= k * r + 1;
      EXPECT_EQ(count_increasing_assignments(r, l) * prod, factorial(static_cast<std::size_t>(l * r + 1)));
    }
  }
  EXPECT_THROW(count_increasing_assignments(3, 4), OracleRefusal);
  EXPECT_THROW(count_increasing_assignments(0, 3), std::invalid_argument);
}

TEST(ExactEscape, Examples) {
  EXPECT_EQ(exact_escape_probability(Hypergraph(3, {{1, 2}}), 0, 2), Rational(0));
  EXPECT_EQ(exact_escape_probability(single_edge3(), 0, 0), Rational(1, 3));
  EXPECT_EQ(exact_escape_probability(single_edge3(), 0, 1), Rational(0));
  EXPECT_THROW(exact_escape_probability(single_edge3(), 3, 0), HypergraphError);
  EXPECT_THROW(exact_escape_probability(Hypergraph(11, {}), 0, 0), OracleRefusal);
}

TEST(ExactEscape, BelowBound) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int r = 1 + static_cast<int>(seed % 2);
    const auto g = random_linear_bounded_degree(r, 2 + static_cast<int>(seed % 2), 8, seed);
    const int d = static_cast<int>(degree_profile(g).max_degree);
    if (d == 0) continue;
    for (std::size_t h = 0; h <= 2; ++h) {
      const auto p = exact_escape_probability(g, 0, h);
      EXPECT_LE(to_double(p), escape_probability_bound(d, r, static_cast<int>(h)) + 1e-12);
    }
  }
}

TEST(ExactEscape, LoosePathMatchesIncreasingProbability) {
  // From an end of a loose path of length l, escaping N_{l-1} requires the
  // whole path to be increasing.
  for (auto [r, l] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
    const auto p = make_loose_path(r, l);
    EXPECT_EQ(exact_escape_probability(p.graph, p.first, static_cast<std::size_t>(l - 1)),
              increasing_path_probability(r, l).probability);
  }
}
