#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgreedy {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Raised when a hypergraph would violate one of its structural invariants.
class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Immutable vertex/edge incidence structure.
 *
 * Vertices are the dense ids 0..n-1. Every edge is stored as a sorted id
 * sequence of size >= 2, so set equality and containment are canonical.
 * Edge ids follow construction order.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges)
      : n_(n), edges_(std::move(edges)), incidence_(n) {
    if (n_ >= kNoVertex) throw HypergraphError("vertex count too large");
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto& e = edges_[i];
      if (e.size() < 2) {
        throw HypergraphError("edge " + std::to_string(i) + " has fewer than 2 vertices");
      }
      std::sort(e.begin(), e.end());
      if (e.back() >= n_) {
        throw HypergraphError("edge " + std::to_string(i) + " references vertex " +
                              std::to_string(e.back()) + " >= n");
      }
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw HypergraphError("edge " + std::to_string(i) + " repeats a vertex");
      }
      if (!seen.insert(e).second) {
        throw HypergraphError("edge " + std::to_string(i) + " duplicates an earlier edge");
      }
      for (Vertex v : e) incidence_[v].push_back(static_cast<EdgeId>(i));
    }
    if (!edges_.empty()) {
      const std::size_t k = edges_.front().size();
      const bool uniform =
          std::all_of(edges_.begin(), edges_.end(), [k](const auto& e) { return e.size() == k; });
      if (uniform) uniformity_ = k;
    }
  }

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }

  [[nodiscard]] std::span<const Vertex> edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  [[nodiscard]] const std::vector<std::vector<Vertex>>& edges() const noexcept { return edges_; }

  /// Common edge size (r+1) when all edges agree; empty for edgeless or mixed inputs.
  [[nodiscard]] std::optional<std::size_t> uniformity() const noexcept { return uniformity_; }

  [[nodiscard]] bool edge_contains(EdgeId e, Vertex v) const {
    const auto& ed = edges_.at(e);
    return std::binary_search(ed.begin(), ed.end(), v);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::optional<std::size_t> uniformity_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  bool is_regular = true;
};

inline DegreeProfile degree_profile(const Hypergraph& g) {
  DegreeProfile p;
  p.degrees.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) p.degrees[v] = g.incident(v).size();
  if (!p.degrees.empty()) {
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                               [&](std::size_t x) { return x == p.degrees.front(); });
  }
  return p;
}

/// Two distinct edges sharing at least two vertices, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> find_overlapping_pair(const Hypergraph& g) {
  // For each vertex pair seen inside some edge remember the first edge.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> first_edge(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto ed = g.edge(e);
    for (std::size_t i = 0; i < ed.size(); ++i) {
      for (std::size_t j = i + 1; j < ed.size(); ++j) {
        auto& bucket = first_edge[ed[i]];
        auto it = std::find_if(bucket.begin(), bucket.end(),
                               [&](const auto& p) { return p.first == ed[j]; });
        if (it != bucket.end()) return std::make_pair(it->second, e);
        bucket.emplace_back(ed[j], e);
      }
    }
  }
  return std::nullopt;
}

inline bool is_linear(const Hypergraph& g) { return !find_overlapping_pair(g).has_value(); }

/// Membership mask for a vertex list; throws on out-of-range ids.
inline std::vector<char> vertex_mask(const Hypergraph& g, std::span<const Vertex> s) {
  std::vector<char> mask(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw HypergraphError("vertex " + std::to_string(v) + " out of range");
    }
    mask[v] = 1;
  }
  return mask;
}

/// True iff no edge of g lies entirely inside s.
inline bool is_independent(const Hypergraph& g, std::span<const Vertex> s) {
  const auto mask = vertex_mask(g, s);
  for (const auto& e : g.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return mask[v] != 0; })) return false;
  }
  return true;
}

/// Induced sub-hypergraph together with the id maps in both directions.
struct InducedSubhypergraph {
  Hypergraph graph;
  std::vector<Vertex> to_parent;    // local id -> id in the parent
  std::vector<Vertex> from_parent;  // parent id -> local id, kNoVertex if absent
  std::vector<EdgeId> parent_edge;  // local edge id -> parent edge id
};

inline InducedSubhypergraph induced_subhypergraph(const Hypergraph& g, std::span<const Vertex> s) {
  const auto mask = vertex_mask(g, s);
  InducedSubhypergraph out;
  out.from_parent.assign(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mask[v]) {
      out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto ed = g.edge(e);
    if (!std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return mask[v] != 0; })) continue;
    std::vector<Vertex> local;
    local.reserve(ed.size());
    for (Vertex v : ed) local.push_back(out.from_parent[v]);
    edges.push_back(std::move(local));
    out.parent_edge.push_back(e);
  }
  out.graph = Hypergraph(out.to_parent.size(), std::move(edges));
  return out;
}

/// Edge-BFS distances from v: one step moves from a vertex to every other vertex
/// of an incident edge. Unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> edge_distances(const Hypergraph& g, Vertex v,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  if (v >= g.num_vertices()) throw HypergraphError("vertex " + std::to_string(v) + " out of range");
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices(), kInf);
  std::vector<char> edge_done(g.num_edges(), 0);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    if (dist[x] >= limit) continue;
    for (EdgeId e : g.incident(x)) {
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      for (Vertex y : g.edge(e)) {
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
  }
  return dist;
}

/// N_h(v) by edge-BFS distance. Sorted ascending.
inline std::vector<Vertex> neighborhood(const Hypergraph& g, Vertex v, std::size_t h) {
  const auto dist = edge_distances(g, v, h);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (dist[x] <= h) out.push_back(x);
  }
  return out;
}

/**
 * N_h(v) as the set of endpoints of loose paths of length <= h starting at v.
 *
 * A loose path is a sequence of edges where each new edge meets the union of
 * the previous ones exactly in the current endpoint. Exponential in h; meant
 * for small instances where it is compared against the edge-BFS variant.
 */
inline std::vector<Vertex> path_neighborhood(const Hypergraph& g, Vertex v, std::size_t h) {
  if (v >= g.num_vertices()) throw HypergraphError("vertex " + std::to_string(v) + " out of range");
  std::vector<char> reached(g.num_vertices(), 0);
  std::vector<int> used(g.num_vertices(), 0);
  reached[v] = 1;
  auto dfs = [&](auto&& self, Vertex end, std::size_t len) -> void {
    if (len == h) return;
    for (EdgeId e : g.incident(end)) {
      const auto ed = g.edge(e);
      bool fresh = true;
      for (Vertex y : ed) {
        if (y != end && used[y]) {
          fresh = false;
          break;
        }
      }
      if (!fresh) continue;
      for (Vertex y : ed) ++used[y];
      for (Vertex y : ed) {
        if (y == end) continue;
        reached[y] = 1;
        self(self, y, len + 1);
      }
      for (Vertex y : ed) --used[y];
    }
  };
  used[v] = 1;
  dfs(dfs, v, 0);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (reached[x]) out.push_back(x);
  }
  return out;
}

}  // namespace hgreedy
