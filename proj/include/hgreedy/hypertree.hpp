#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hgreedy/girth.hpp"
#include "hgreedy/hypergraph.hpp"
#include "hgreedy/weights.hpp"

namespace hgreedy {

/**
 * Hypertree (linear, Berge-acyclic, connected) with a designated root.
 *
 * Every non-root vertex has exactly one ascending edge, the edge through which
 * BFS from the root first reaches it; all other incident edges descend.
 */
class RootedHypertree {
 public:
  RootedHypertree() = default;

  /// Validates the tree shape and orients edges away from `root`.
  RootedHypertree(Hypergraph g, Vertex root) : g_(std::move(g)), root_(root) {
    const std::size_t n = g_.num_vertices();
    if (root_ >= n) throw HypergraphError("root out of range");
    if (!is_linear(g_)) throw HypergraphError("hypertree must be linear");
    if (!is_berge_acyclic(g_)) throw HypergraphError("hypertree must be Berge-acyclic");
    orient();
    if (order_.size() != n) throw HypergraphError("hypertree must be connected");
  }

  [[nodiscard]] const Hypergraph& graph() const noexcept { return g_; }
  [[nodiscard]] Vertex root() const noexcept { return root_; }
  [[nodiscard]] std::size_t depth(Vertex v) const { return depth_.at(v); }
  [[nodiscard]] std::optional<EdgeId> ascending_edge(Vertex v) const { return up_.at(v); }
  [[nodiscard]] std::span<const EdgeId> descending_edges(Vertex v) const { return down_.at(v); }
  /// BFS order from the root; parents precede children.
  [[nodiscard]] std::span<const Vertex> order() const noexcept { return order_; }
  [[nodiscard]] bool is_leaf(Vertex v) const { return down_.at(v).empty(); }

 private:
  void orient() {
    const std::size_t n = g_.num_vertices();
    up_.assign(n, std::nullopt);
    down_.assign(n, {});
    depth_.assign(n, 0);
    std::vector<char> seen(n, 0), edge_seen(g_.num_edges(), 0);
    std::queue<Vertex> q;
    seen[root_] = 1;
    q.push(root_);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      order_.push_back(x);
      for (EdgeId e : g_.incident(x)) {
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        down_[x].push_back(e);
        for (Vertex y : g_.edge(e)) {
          if (y == x) continue;
          seen[y] = 1;
          up_[y] = e;
          depth_[y] = depth_[x] + 1;
          q.push(y);
        }
      }
    }
  }

  Hypergraph g_;
  Vertex root_ = 0;
  std::vector<std::optional<EdgeId>> up_;
  std::vector<std::vector<EdgeId>> down_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> order_;
};

/**
 * Bonus function S_T, evaluated children-first in reverse BFS order.
 *
 * Leaves get their weight. An internal v gets W_v if, for every descending
 * edge e, W_v exceeds min over u in e, u != v, of S_T(u); otherwise 0.
 * At the root this equals W_root * [root is selected by the greedy process].
 */
inline std::vector<double> bonus_function(const RootedHypertree& t, const WeightAssignment& w) {
  const Hypergraph& g = t.graph();
  if (w.size() != g.num_vertices()) throw std::invalid_argument("weight count does not match vertex count");
  for (double x : w.weights()) {
    if (!(x > 0.0)) throw std::invalid_argument("bonus function needs strictly positive weights");
  }
  std::vector<double> s(g.num_vertices(), 0.0);
  const auto order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const double wv = w.weight(v);
    bool survives = true;
    for (EdgeId e : t.descending_edges(v)) {
      double m = 2.0;
      for (Vertex u : g.edge(e)) {
        if (u != v) m = std::min(m, s[u]);
      }
      if (!(wv > m)) {
        survives = false;
        break;
      }
    }
    s[v] = survives ? wv : 0.0;
  }
  return s;
}

}  // namespace hgreedy
