#pragma once

// Test-only oracles and instance builders. Nothing here calls into the code
// paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgreedy/hypergraph.hpp"
#include "hgreedy/io.hpp"
#include "hgreedy/rng.hpp"

namespace hgreedy::testing {

inline Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Hypergraph single_edge3() { return Hypergraph(3, {{0, 1, 2}}); }
inline Hypergraph loose_path2() { return Hypergraph(5, {{0, 1, 2}, {2, 3, 4}}); }

inline Hypergraph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
  return Hypergraph(n, std::move(e));
}

inline Hypergraph fano_plane() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

inline Hypergraph petersen() { return load_hypergraph_file(std::string(HGREEDY_DATA_DIR) + "/petersen.hg"); }

/// Random hypergraph with edges of mixed sizes in [2, max_edge], duplicates skipped.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t tries = 0; edges.size() < m && tries < 50 * m; ++tries) {
    const std::size_t k = 2 + uniform_below(rng, std::min(max_edge, n) - 1);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    shuffle(all, rng);
    std::vector<Vertex> e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

/// Shortest Berge cycle by exhaustive search over sequences of distinct
/// vertices and distinct edges. Exponential; small inputs only.
inline std::optional<std::size_t> brute_force_girth(const Hypergraph& g) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  auto contains = [&](EdgeId e, Vertex v) {
    const auto ed = g.edge(e);
    return std::find(ed.begin(), ed.end(), v) != ed.end();
  };
  for (std::size_t k = 2; k <= std::min(n, m); ++k) {
    std::vector<Vertex> vs;
    std::vector<EdgeId> es;
    std::vector<char> vused(n, 0), eused(m, 0);
    bool found = false;
    auto rec = [&](auto&& self) -> void {
      if (found) return;
      if (vs.size() == k) {
        // Close the cycle: an unused edge holding v_k and v_1.
        for (EdgeId e = 0; e < m && !found; ++e) {
          if (!eused[e] && contains(e, vs.back()) && contains(e, vs.front())) found = true;
        }
        return;
      }
      for (Vertex v = 0; v < n && !found; ++v) {
        if (vused[v]) continue;
        if (vs.empty()) {
          vused[v] = 1;
          vs.push_back(v);
          self(self);
          vs.pop_back();
          vused[v] = 0;
          continue;
        }
        for (EdgeId e = 0; e < m && !found; ++e) {
          if (eused[e] || !contains(e, vs.back()) || !contains(e, v)) continue;
          vused[v] = 1;
          eused[e] = 1;
          vs.push_back(v);
          es.push_back(e);
          self(self);
          vs.pop_back();
          es.pop_back();
          vused[v] = 0;
          eused[e] = 0;
        }
      }
    };
    rec(rec);
    if (found) return k;
  }
  return std::nullopt;
}

/// Greedy run written directly from the verbal rule, O(n^2 m): pick the
/// heaviest remaining vertex, then delete every remaining vertex v having an
/// edge e with e \ {v} inside the selection.
inline std::vector<Vertex> naive_greedy(const Hypergraph& g, const std::vector<Vertex>& ranking) {
  const std::size_t n = g.num_vertices();
  std::vector<char> removed(n, 0), chosen(n, 0);
  for (Vertex v : ranking) {
    if (removed[v]) continue;
    chosen[v] = 1;
    removed[v] = 1;
    for (Vertex x = 0; x < n; ++x) {
      if (removed[x]) continue;
      for (const auto& e : g.edges()) {
        if (std::find(e.begin(), e.end(), x) == e.end()) continue;
        bool rest = true;
        for (Vertex y : e) {
          if (y != x && !chosen[y]) rest = false;
        }
        if (rest) {
          removed[x] = 1;
          break;
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (chosen[v]) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> iota_ranking(std::size_t n) {
  std::vector<Vertex> r(n);
  for (Vertex v = 0; v < n; ++v) r[v] = v;
  return r;
}

}  // namespace hgreedy::testing
