#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hgreedy/girth.hpp"
#include "hgreedy/hypergraph.hpp"
#include "hgreedy/hypertree.hpp"
#include "hgreedy/rng.hpp"

namespace hgreedy {

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TreeVariant { full, root_heavy };

/// T(d,h) (full) or T~(d,h) (root_heavy) with (r+1)-uniform edges.
struct TreeSpec {
  int r = 1;
  int d = 1;
  int h = 0;
  TreeVariant variant = TreeVariant::full;

  void validate() const {
    if (r < 1 || d < 1 || h < 0) throw std::invalid_argument("tree spec needs r >= 1, d >= 1, h >= 0");
  }
};

/// Vertex count of T(d,h): sum over k <= h of (dr)^k.
inline std::uint64_t full_tree_size(int d, int r, int h) {
  std::uint64_t total = 0, level = 1;
  for (int k = 0; k <= h; ++k) {
    total += level;
    level *= static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(r);
  }
  return total;
}

inline RootedHypertree make_tree(const TreeSpec& spec) {
  spec.validate();
  const auto r = static_cast<std::size_t>(spec.r);
  // Children per vertex bound the size; refuse anything that does not fit in ids.
  if (full_tree_size(spec.d, spec.r, spec.h) >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("tree too large");
  }
  std::vector<std::vector<Vertex>> edges;
  std::vector<int> depth{0};
  std::size_t n = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (depth[i] == spec.h) continue;
    int fanout = spec.d;
    if (spec.variant == TreeVariant::root_heavy && i != 0) fanout = spec.d - 1;
    for (int k = 0; k < fanout; ++k) {
      std::vector<Vertex> e{static_cast<Vertex>(i)};
      for (std::size_t c = 0; c < r; ++c) {
        e.push_back(static_cast<Vertex>(n++));
        depth.push_back(depth[i] + 1);
      }
      edges.push_back(std::move(e));
    }
  }
  return RootedHypertree(Hypergraph(n, std::move(edges)), 0);
}

struct LoosePath {
  Hypergraph graph;
  Vertex first = 0;
  Vertex last = 0;
};

/// Vertices v_0..v_{lr}; edge k is {v_{kr}, ..., v_{(k+1)r}}.
inline LoosePath make_loose_path(int r, int l) {
  if (r < 1 || l < 1) throw std::invalid_argument("loose path needs r, l >= 1");
  std::vector<std::vector<Vertex>> edges;
  for (int k = 0; k < l; ++k) {
    std::vector<Vertex> e;
    for (int j = k * r; j <= (k + 1) * r; ++j) e.push_back(static_cast<Vertex>(j));
    edges.push_back(std::move(e));
  }
  const auto n = static_cast<std::size_t>(l * r + 1);
  return {Hypergraph(n, std::move(edges)), 0, static_cast<Vertex>(l * r)};
}

/**
 * Loose Berge k-cycle of (r+1)-edges.
 *
 * k >= 3: edge i holds junctions i and i+1 (mod k) plus r-1 private vertices.
 * k == 2: two edges sharing vertices {0,1}, each with r-1 private vertices
 * (needs r >= 2, otherwise the two edges coincide).
 */
inline Hypergraph make_loose_berge_cycle(int r, int k) {
  if (r < 1 || k < 2) throw std::invalid_argument("loose cycle needs r >= 1, k >= 2");
  if (k == 2 && r < 2) throw std::invalid_argument("a 2-cycle of 2-edges would duplicate an edge");
  std::vector<std::vector<Vertex>> edges;
  Vertex next = static_cast<Vertex>(k == 2 ? 2 : k);
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> e;
    if (k == 2) {
      e = {0, 1};
    } else {
      e = {static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)};
    }
    for (int j = 0; j < r - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(next, std::move(edges));
}

namespace detail {

inline std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace detail

/**
 * Random (r+1)-uniform linear hypergraph with maximum degree <= d.
 *
 * Edges are proposed among vertices that still have spare degree and are
 * rejected if they would share two vertices with an existing edge. Stops when
 * fewer than r+1 vertices remain open or proposals keep failing.
 */
inline Hypergraph random_linear_bounded_degree(int r, int d, std::size_t n, std::uint64_t seed) {
  if (r < 1 || d < 1 || n < static_cast<std::size_t>(r + 1)) {
    throw std::invalid_argument("random_linear_bounded_degree needs r >= 1, d >= 1, n >= r+1");
  }
  const auto k = static_cast<std::size_t>(r + 1);
  Rng rng(seed);
  std::vector<int> degree(n, 0);
  std::vector<Vertex> open(n);
  for (Vertex v = 0; v < n; ++v) open[v] = v;
  std::unordered_set<std::uint64_t> pairs;
  std::vector<std::vector<Vertex>> edges;
  const std::size_t max_failures = 200 + 4 * n;
  std::size_t failures = 0;
  std::vector<Vertex> pick;
  while (open.size() >= k && failures < max_failures) {
    // Partial Fisher-Yates draw of k distinct open vertices.
    pick.clear();
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(rng, open.size() - i));
      std::swap(open[i], open[j]);
      pick.push_back(open[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (pairs.count(detail::pair_key(pick[i], pick[j]))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      ++failures;
      continue;
    }
    failures = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) pairs.insert(detail::pair_key(pick[i], pick[j]));
      ++degree[pick[i]];
    }
    edges.push_back(pick);
    std::erase_if(open, [&](Vertex v) { return degree[v] >= d; });
  }
  return Hypergraph(n, std::move(edges));
}

struct RegularGirthSample {
  Hypergraph graph;
  std::size_t attempts = 0;
};

/**
 * d-regular (r+1)-uniform hypergraph with Berge girth >= g_min, by rejection
 * from the configuration model: n*d stubs are shuffled and cut into blocks of
 * r+1. Throws GenerationFailure when `max_attempts` samples are all rejected.
 */
inline RegularGirthSample random_regular_girth(int r, int d, std::size_t n, std::size_t g_min, std::uint64_t seed,
                                               std::size_t max_attempts = 100000) {
  if (r < 1 || d < 1 || n == 0) throw std::invalid_argument("random_regular_girth needs r >= 1, d >= 1, n >= 1");
  const auto k = static_cast<std::size_t>(r + 1);
  if ((n * static_cast<std::size_t>(d)) % k != 0) {
    throw std::invalid_argument("n*d must be divisible by r+1");
  }
  Rng rng(seed);
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v) {
    for (int j = 0; j < d; ++j) stubs.push_back(v);
  }
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    shuffle(stubs, rng);
    std::vector<std::vector<Vertex>> edges;
    bool ok = true;
    std::unordered_set<std::uint64_t> pairs;
    for (std::size_t i = 0; i < stubs.size() && ok; i += k) {
      std::vector<Vertex> e(stubs.begin() + static_cast<std::ptrdiff_t>(i),
                            stubs.begin() + static_cast<std::ptrdiff_t>(i + k));
      for (std::size_t a = 0; a < k && ok; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          // A pair shared with another edge means girth 2.
          if (e[a] == e[b] || (g_min >= 3 && !pairs.insert(detail::pair_key(e[a], e[b])).second)) {
            ok = false;
            break;
          }
        }
      }
      edges.push_back(std::move(e));
    }
    if (!ok) continue;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Hypergraph g(n, std::move(edges));
    const auto girth = berge_girth(g);
    if (girth.acyclic() || *girth.girth >= g_min) return {std::move(g), attempt};
  }
  throw GenerationFailure("no " + std::to_string(d) + "-regular " + std::to_string(k) +
                          "-uniform hypergraph with girth >= " + std::to_string(g_min) + " on " +
                          std::to_string(n) + " vertices after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace hgreedy
