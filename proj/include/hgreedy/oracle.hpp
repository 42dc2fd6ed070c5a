#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hgreedy/closure.hpp"
#include "hgreedy/greedy.hpp"
#include "hgreedy/hypergraph.hpp"
#include "hgreedy/rational.hpp"

namespace hgreedy {

/// The instance is beyond what exhaustive enumeration handles.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxPermutationVertices = 10;
inline constexpr std::size_t kMaxAlphaVertices = 24;

inline std::int64_t factorial(std::size_t n) {
  std::int64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::int64_t>(i));
  return f;
}

/**
 * Calls fn(worker, ranking) for every permutation of 0..n-1.
 *
 * Work is split by the leading element; within a block permutations run in
 * lexicographic order. Each worker owns its state, so exact integer tallies
 * combine to the same totals for any worker count.
 */
template <class Fn>
void for_each_ranking(std::size_t n, std::size_t workers, Fn&& fn) {
  if (n == 0) {
    std::vector<Vertex> empty;
    fn(std::size_t{0}, std::span<const Vertex>(empty));
    return;
  }
  workers = std::clamp<std::size_t>(workers, 1, n);
  auto block = [&](std::size_t worker) {
    for (std::size_t first = worker; first < n; first += workers) {
      std::vector<Vertex> perm;
      perm.push_back(static_cast<Vertex>(first));
      for (Vertex v = 0; v < n; ++v) {
        if (v != first) perm.push_back(v);
      }
      do {
        fn(worker, std::span<const Vertex>(perm));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };
  if (workers == 1) {
    block(0);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(block, w);
  for (auto& t : pool) t.join();
}

struct ExactGreedyStats {
  Rational expected_size{0};
  std::vector<Rational> selection_prob;
  std::int64_t permutations = 0;
};

/// E|I(G)| and P[v in I(G)] over all n! rankings, in exact rationals.
inline ExactGreedyStats exact_greedy_stats(const Hypergraph& g, std::size_t workers = 1) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxPermutationVertices) {
    throw OracleRefusal("exact greedy stats enumerate n! rankings; n=" + std::to_string(n) + " exceeds the limit " +
                        std::to_string(kMaxPermutationVertices));
  }
  workers = std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(n, 1)));
  std::vector<std::vector<std::int64_t>> counts(workers, std::vector<std::int64_t>(n, 0));
  std::vector<GreedyEngine> engines(workers, GreedyEngine(g));
  for_each_ranking(n, workers, [&](std::size_t w, std::span<const Vertex> ranking) {
    engines[w].run(ranking);
    for (Vertex v : engines[w].selection_order()) ++counts[w][v];
  });
  ExactGreedyStats out;
  out.permutations = factorial(n);
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t c = 0;
    for (const auto& row : counts) c += row[v];
    total += c;
    out.selection_prob.emplace_back(c, out.permutations);
  }
  out.expected_size = n == 0 ? Rational(0) : Rational(total, out.permutations);
  return out;
}

struct AlphaResult {
  std::size_t alpha = 0;
  std::vector<Vertex> witness;
};

/// Maximum independent set by include/exclude branching with a size bound.
inline AlphaResult exact_alpha(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxAlphaVertices) {
    throw OracleRefusal("exact alpha enumerates subsets; n=" + std::to_string(n) + " exceeds the limit " +
                        std::to_string(kMaxAlphaVertices));
  }
  std::vector<std::uint32_t> inside(g.num_edges(), 0);
  std::vector<Vertex> current, best;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (current.size() + (n - v) <= best.size()) return;
    if (v == n) {
      best = current;
      return;
    }
    bool can_take = true;
    for (EdgeId e : g.incident(v)) {
      if (inside[e] + 1 == g.edge(e).size()) {
        can_take = false;
        break;
      }
    }
    if (can_take) {
      for (EdgeId e : g.incident(v)) ++inside[e];
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
      for (EdgeId e : g.incident(v)) --inside[e];
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return {best.size(), best};
}

/**
 * Counts assignments of {0..lr} to a loose path of length l under which the
 * lightest vertex of every edge e_k is its left endpoint v_{kr}.
 */
inline std::int64_t count_increasing_assignments(int r, int l) {
  if (r < 1 || l < 1) throw std::invalid_argument("count_increasing_assignments needs r, l >= 1");
  const auto n = static_cast<std::size_t>(l * r + 1);
  if (n > kMaxPermutationVertices) {
    throw OracleRefusal("(lr+1)! enumeration with lr+1=" + std::to_string(n) + " exceeds the limit " +
                        std::to_string(kMaxPermutationVertices));
  }
  std::vector<int> weight(n);
  std::iota(weight.begin(), weight.end(), 0);
  std::int64_t count = 0;
  do {
    bool increasing = true;
    for (int k = 0; k < l && increasing; ++k) {
      const int left = weight[static_cast<std::size_t>(k * r)];
      for (int j = k * r + 1; j <= (k + 1) * r; ++j) {
        if (weight[static_cast<std::size_t>(j)] < left) {
          increasing = false;
          break;
        }
      }
    }
    if (increasing) ++count;
  } while (std::next_permutation(weight.begin(), weight.end()));
  return count;
}

/// P[B({v}) is not inside N_h(v)] over all n! rankings.
inline Rational exact_escape_probability(const Hypergraph& g, Vertex v, std::size_t h, std::size_t workers = 1) {
  const std::size_t n = g.num_vertices();
  if (v >= n) throw HypergraphError("vertex out of range");
  if (n > kMaxPermutationVertices) {
    throw OracleRefusal("exact escape probability enumerates n! rankings; n=" + std::to_string(n) +
                        " exceeds the limit " + std::to_string(kMaxPermutationVertices));
  }
  const auto ball = neighborhood(g, v, h);
  std::vector<char> in_ball(n, 0);
  for (Vertex x : ball) in_ball[x] = 1;
  workers = std::max<std::size_t>(1, std::min(workers, n));
  std::vector<std::int64_t> escapes(workers, 0);
  const Vertex seed[] = {v};
  for_each_ranking(n, workers, [&](std::size_t w, std::span<const Vertex> ranking) {
    const auto wa = WeightAssignment::from_ranking(std::vector<Vertex>(ranking.begin(), ranking.end()));
    const auto closure = influence_blocking_closure_vertices(g, wa, seed);
    if (std::any_of(closure.begin(), closure.end(), [&](Vertex x) { return !in_ball[x]; })) ++escapes[w];
  });
  return Rational(std::accumulate(escapes.begin(), escapes.end(), std::int64_t{0}), factorial(n));
}

}  // namespace hgreedy
