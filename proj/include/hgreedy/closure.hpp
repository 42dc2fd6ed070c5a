#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hgreedy/hypergraph.hpp"
#include "hgreedy/weights.hpp"

namespace hgreedy {

/**
 * Induced H is influence-blocking when no vertex of H is the lightest vertex
 * of a G-edge that is not an edge of H.
 */
inline bool is_influence_blocking(const Hypergraph& g, const WeightAssignment& w,
                                  std::span<const Vertex> vertices) {
  const auto mask = vertex_mask(g, vertices);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto ed = g.edge(e);
    const bool inside = std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return mask[v] != 0; });
    if (!inside && mask[min_vertex(g, w, e)]) return false;
  }
  return true;
}

/// Vertex set of B(A), sorted ascending.
///
/// Starts from A and absorbs every edge whose lightest vertex is already
/// absorbed. Each edge is examined once, when its lightest vertex joins.
inline std::vector<Vertex> influence_blocking_closure_vertices(const Hypergraph& g, const WeightAssignment& w,
                                                               std::span<const Vertex> a) {
  if (a.empty()) throw std::invalid_argument("closure seed set is empty");
  if (w.size() != g.num_vertices()) throw std::invalid_argument("weight count does not match vertex count");
  std::vector<char> in(g.num_vertices(), 0);
  std::vector<Vertex> work;
  for (Vertex v : a) {
    if (v >= g.num_vertices()) throw HypergraphError("vertex " + std::to_string(v) + " out of range");
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    const Vertex x = work.back();
    work.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (min_vertex(g, w, e) != x) continue;
      for (Vertex y : g.edge(e)) {
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

inline InducedSubhypergraph influence_blocking_closure(const Hypergraph& g, const WeightAssignment& w,
                                                       std::span<const Vertex> a) {
  const auto vs = influence_blocking_closure_vertices(g, w, a);
  return induced_subhypergraph(g, vs);
}

}  // namespace hgreedy
