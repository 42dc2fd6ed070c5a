#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgreedy/hypergraph.hpp"
#include "hgreedy/rng.hpp"

namespace hgreedy {

/**
 * Distinct per-vertex weights, carried together with their ranking
 * (vertex ids in strictly decreasing weight order).
 *
 * The greedy process depends only on the ranking; real weights are kept for
 * the bonus function, which needs positive values.
 */
class WeightAssignment {
 public:
  /// Weights (n - position) / n, i.e. the top-ranked vertex gets 1, the last 1/n.
  static WeightAssignment from_ranking(std::vector<Vertex> ranking) {
    const std::size_t n = ranking.size();
    WeightAssignment w;
    w.position_.assign(n, kNoVertex);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = ranking[i];
      if (v >= n || w.position_[v] != kNoVertex) {
        throw std::invalid_argument("ranking is not a permutation of 0..n-1");
      }
      w.position_[v] = static_cast<Vertex>(i);
    }
    w.weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.weights_[ranking[i]] = static_cast<double>(n - i) / static_cast<double>(n);
    }
    w.ranking_ = std::move(ranking);
    return w;
  }

  /// Explicit weights in [0,1]; duplicates are rejected rather than tie-broken.
  static WeightAssignment from_weights(std::vector<double> weights) {
    const std::size_t n = weights.size();
    for (double x : weights) {
      if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("weight outside [0,1]");
    }
    std::vector<Vertex> ranking(n);
    std::iota(ranking.begin(), ranking.end(), Vertex{0});
    std::sort(ranking.begin(), ranking.end(),
              [&](Vertex a, Vertex b) { return weights[a] > weights[b]; });
    for (std::size_t i = 1; i < n; ++i) {
      if (weights[ranking[i - 1]] == weights[ranking[i]]) {
        throw std::invalid_argument("duplicate weight " + std::to_string(weights[ranking[i]]));
      }
    }
    WeightAssignment w;
    w.position_.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.position_[ranking[i]] = static_cast<Vertex>(i);
    w.ranking_ = std::move(ranking);
    w.weights_ = std::move(weights);
    return w;
  }

  /// I.i.d. uniform weights on (0,1), redrawn on the (measure-zero) event of a tie.
  static WeightAssignment uniform(std::size_t n, Rng& rng) {
    for (;;) {
      std::vector<double> x(n);
      for (auto& v : x) v = uniform_open01(rng);
      auto sorted = x;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        return from_weights(std::move(x));
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return ranking_.size(); }
  [[nodiscard]] double weight(Vertex v) const { return weights_.at(v); }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
  [[nodiscard]] std::span<const Vertex> ranking() const noexcept { return ranking_; }
  /// 0 for the heaviest vertex.
  [[nodiscard]] Vertex position(Vertex v) const { return position_.at(v); }
  [[nodiscard]] bool heavier(Vertex a, Vertex b) const { return position_[a] < position_[b]; }

  /// Restriction to a subset, renumbered through `to_parent` (local -> parent id).
  [[nodiscard]] WeightAssignment restrict_to(std::span<const Vertex> to_parent) const {
    std::vector<double> sub;
    sub.reserve(to_parent.size());
    for (Vertex v : to_parent) sub.push_back(weights_.at(v));
    return from_weights(std::move(sub));
  }

 private:
  std::vector<double> weights_;
  std::vector<Vertex> ranking_;
  std::vector<Vertex> position_;
};

/// Vertex of minimum weight in edge e.
inline Vertex min_vertex(const Hypergraph& g, const WeightAssignment& w, EdgeId e) {
  const auto ed = g.edge(e);
  return *std::max_element(ed.begin(), ed.end(),
                           [&](Vertex a, Vertex b) { return w.position(a) < w.position(b); });
}

/// v defeats e iff some other vertex of e is lighter than v.
inline bool defeats(const Hypergraph& g, const WeightAssignment& w, Vertex v, EdgeId e) {
  if (e >= g.num_edges() || !g.edge_contains(e, v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in edge " + std::to_string(e));
  }
  return min_vertex(g, w, e) != v;
}

}  // namespace hgreedy
