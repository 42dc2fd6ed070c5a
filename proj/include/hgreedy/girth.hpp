#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "hgreedy/hypergraph.hpp"

namespace hgreedy {

/// Berge cycle certificate: v1,e1,...,vk,ek with {v_i, v_{i+1 mod k}} inside e_i.
struct BergeCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }
};

struct GirthResult {
  std::optional<std::size_t> girth;  // empty means acyclic
  std::optional<BergeCycle> witness;

  [[nodiscard]] bool acyclic() const noexcept { return !girth.has_value(); }
};

inline bool validate_berge_cycle(const Hypergraph& g, const BergeCycle& c) {
  const std::size_t k = c.vertices.size();
  if (k < 2 || c.edges.size() != k) return false;
  auto vs = c.vertices;
  auto es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (c.edges[i] >= g.num_edges() || c.vertices[i] >= g.num_vertices()) return false;
    if (!g.edge_contains(c.edges[i], c.vertices[i])) return false;
    if (!g.edge_contains(c.edges[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

/// True iff the vertex/edge incidence graph is a forest (union-find over incidences).
inline bool is_berge_acyclic(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t total = n + g.num_edges();
  std::vector<std::size_t> parent(total);
  for (std::size_t i = 0; i < total; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (Vertex v : g.edge(e)) {
      const auto a = find(v), b = find(n + e);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

namespace detail {

// Shortest cycle through BFS of the vertex/edge incidence graph.
// Nodes 0..n-1 are vertices, n..n+m-1 are edges.
class IncidenceGraph {
 public:
  explicit IncidenceGraph(const Hypergraph& g) : g_(g), n_(g.num_vertices()) {}

  [[nodiscard]] std::size_t size() const { return n_ + g_.num_edges(); }

  template <class F>
  void for_each_neighbor(std::size_t node, F&& f) const {
    if (node < n_) {
      for (EdgeId e : g_.incident(static_cast<Vertex>(node))) f(n_ + e);
    } else {
      for (Vertex v : g_.edge(static_cast<EdgeId>(node - n_))) f(static_cast<std::size_t>(v));
    }
  }

  [[nodiscard]] std::size_t num_vertices() const { return n_; }

 private:
  const Hypergraph& g_;
  std::size_t n_;
};

}  // namespace detail

/**
 * Berge girth with a witness cycle.
 *
 * Non-linear inputs have girth 2. Otherwise a length-2k cycle of the
 * incidence graph is exactly a Berge k-cycle, so the girth is half the
 * incidence-graph girth, found by BFS from every node.
 */
inline GirthResult berge_girth(const Hypergraph& g) {
  if (auto pair = find_overlapping_pair(g)) {
    const auto a = g.edge(pair->first);
    const auto b = g.edge(pair->second);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    BergeCycle c{{common[0], common[1]}, {pair->first, pair->second}};
    return {2, c};
  }

  if (is_berge_acyclic(g)) return {};

  const detail::IncidenceGraph inc(g);
  const std::size_t total = inc.size();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  std::vector<std::size_t> best_cycle;

  std::vector<std::size_t> dist(total, kInf);
  std::vector<std::size_t> parent(total, kInf);
  std::vector<std::size_t> touched;
  for (std::size_t s = 0; s < total; ++s) {
    for (auto t : touched) {
      dist[t] = kInf;
      parent[t] = kInf;
    }
    touched.clear();
    std::queue<std::size_t> q;
    dist[s] = 0;
    touched.push_back(s);
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      // Any cycle closed from here has length >= 2*dist[x].
      if (best != kInf && 2 * dist[x] >= best) break;
      inc.for_each_neighbor(x, [&](std::size_t y) {
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          q.push(y);
        } else if (parent[x] != y) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (len < best) {
            // Walk both tree paths back to their lowest common ancestor.
            std::vector<std::size_t> px{x}, py{y};
            while (px.back() != s) px.push_back(parent[px.back()]);
            while (py.back() != s) py.push_back(parent[py.back()]);
            while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
              px.pop_back();
              py.pop_back();
            }
            std::vector<std::size_t> cyc(px.rbegin(), px.rend());
            for (std::size_t i = 0; i + 1 < py.size(); ++i) cyc.push_back(py[i]);
            best = cyc.size();
            best_cycle = std::move(cyc);
          }
        }
      });
    }
  }

  if (best == kInf) return {};

  // Rotate so the cycle starts at a vertex node, then split into v_i, e_i.
  const std::size_t n = inc.num_vertices();
  auto start = std::find_if(best_cycle.begin(), best_cycle.end(),
                            [n](std::size_t node) { return node < n; });
  std::rotate(best_cycle.begin(), start, best_cycle.end());
  BergeCycle c;
  for (std::size_t i = 0; i < best_cycle.size(); i += 2) {
    c.vertices.push_back(static_cast<Vertex>(best_cycle[i]));
    c.edges.push_back(static_cast<EdgeId>(best_cycle[i + 1] - n));
  }
  return {c.length(), c};
}

/// Shortest cycle length of a simple graph (2-uniform input) by plain vertex BFS.
/// Independent of the incidence-graph route; used to cross-check r=1 inputs.
inline std::optional<std::size_t> graph_girth(const Hypergraph& g) {
  if (g.uniformity() && *g.uniformity() != 2) throw HypergraphError("graph_girth needs a 2-uniform input");
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, kInf);
    std::vector<Vertex> parent(n, kNoVertex);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : adj[x]) {
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

}  // namespace hgreedy
