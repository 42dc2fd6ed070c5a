#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgreedy/hypergraph.hpp"
#include "hgreedy/rng.hpp"
#include "hgreedy/weights.hpp"

namespace hgreedy {

/**
 * Result of one greedy run.
 *
 * Every vertex is either selected or carries the edge that deleted it:
 * an edge e with v in e and e \ {v} inside the selected set.
 */
struct GreedyOutcome {
  std::vector<Vertex> selected;         // sorted ascending
  std::vector<Vertex> selection_order;  // in the order picked
  std::vector<std::optional<EdgeId>> deletion_witness;

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(selected.begin(), selected.end(), v);
  }
};

/**
 * Reusable state for repeated runs on one hypergraph.
 *
 * After each selection only the edges through the newly selected vertex are
 * rechecked: an edge becomes deadly exactly when all but one of its vertices
 * are selected, and the remaining one is then deleted.
 */
class GreedyEngine {
 public:
  explicit GreedyEngine(const Hypergraph& g)
      : g_(&g), state_(g.num_vertices()), selected_count_(g.num_edges()), witness_(g.num_vertices()) {}

  enum : std::uint8_t { kUndecided = 0, kSelected = 1, kDeleted = 2 };

  /// Runs the process for a ranking (heaviest first). Returns |I|.
  std::size_t run(std::span<const Vertex> ranking) {
    const Hypergraph& g = *g_;
    if (ranking.size() != g.num_vertices()) {
      throw std::invalid_argument("ranking size does not match vertex count");
    }
    std::fill(state_.begin(), state_.end(), kUndecided);
    std::fill(selected_count_.begin(), selected_count_.end(), 0u);
    order_.clear();
    for (Vertex v : ranking) {
      if (state_[v] != kUndecided) continue;
      select(v);
    }
    return order_.size();
  }

  /// Picks from the remaining vertices with `choose(remaining)` returning an index;
  /// the literal remove-and-delete formulation of the algorithm.
  template <class Chooser>
  std::size_t run_sequential(Chooser&& choose) {
    const Hypergraph& g = *g_;
    std::fill(state_.begin(), state_.end(), kUndecided);
    std::fill(selected_count_.begin(), selected_count_.end(), 0u);
    order_.clear();
    std::vector<Vertex> remaining(g.num_vertices());
    for (Vertex v = 0; v < remaining.size(); ++v) remaining[v] = v;
    while (!remaining.empty()) {
      const std::size_t idx = choose(std::span<const Vertex>(remaining));
      select(remaining.at(idx));
      std::erase_if(remaining, [&](Vertex x) { return state_[x] != kUndecided; });
    }
    return order_.size();
  }

  [[nodiscard]] bool is_selected(Vertex v) const { return state_[v] == kSelected; }
  [[nodiscard]] std::span<const Vertex> selection_order() const noexcept { return order_; }

  [[nodiscard]] GreedyOutcome outcome() const {
    GreedyOutcome out;
    out.selection_order = order_;
    out.selected = order_;
    std::sort(out.selected.begin(), out.selected.end());
    out.deletion_witness.resize(state_.size());
    for (Vertex v = 0; v < state_.size(); ++v) {
      if (state_[v] == kDeleted) out.deletion_witness[v] = witness_[v];
    }
    return out;
  }

 private:
  void select(Vertex v) {
    const Hypergraph& g = *g_;
    state_[v] = kSelected;
    order_.push_back(v);
    for (EdgeId e : g.incident(v)) {
      const auto ed = g.edge(e);
      if (++selected_count_[e] + 1 != ed.size()) continue;
      for (Vertex x : ed) {
        if (state_[x] == kUndecided) {
          state_[x] = kDeleted;
          witness_[x] = e;
        }
      }
    }
  }

  const Hypergraph* g_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> selected_count_;
  std::vector<EdgeId> witness_;
  std::vector<Vertex> order_;
};

inline GreedyOutcome greedy_by_ranking(const Hypergraph& g, std::span<const Vertex> ranking) {
  GreedyEngine eng(g);
  eng.run(ranking);
  return eng.outcome();
}

inline GreedyOutcome greedy_by_ranking(const Hypergraph& g, const WeightAssignment& w) {
  if (w.size() != g.num_vertices()) {
    throw std::invalid_argument("weight count does not match vertex count");
  }
  return greedy_by_ranking(g, w.ranking());
}

/// Uniformly random ranking drawn from `seed`, then the ranking formulation.
inline GreedyOutcome greedy_uniform(const Hypergraph& g, std::uint64_t seed) {
  Rng rng(seed);
  const auto ranking = random_ranking(g.num_vertices(), rng);
  return greedy_by_ranking(g, ranking);
}

/// Sequential formulation: repeatedly pick the heaviest remaining vertex.
inline GreedyOutcome greedy_sequential(const Hypergraph& g, const WeightAssignment& w) {
  GreedyEngine eng(g);
  eng.run_sequential([&](std::span<const Vertex> rem) {
    return static_cast<std::size_t>(
        std::min_element(rem.begin(), rem.end(),
                         [&](Vertex a, Vertex b) { return w.position(a) < w.position(b); }) -
        rem.begin());
  });
  return eng.outcome();
}

/// Sequential formulation with a uniformly random remaining vertex at every step.
inline GreedyOutcome greedy_sequential_uniform(const Hypergraph& g, std::uint64_t seed) {
  Rng rng(seed);
  GreedyEngine eng(g);
  eng.run_sequential([&](std::span<const Vertex> rem) {
    return static_cast<std::size_t>(uniform_below(rng, rem.size()));
  });
  return eng.outcome();
}

/// One-shot rule: keep v iff v is not the lightest vertex of any edge through it.
inline std::vector<Vertex> static_min_select(const Hypergraph& g, const WeightAssignment& w) {
  if (w.size() != g.num_vertices()) {
    throw std::invalid_argument("weight count does not match vertex count");
  }
  std::vector<char> loser(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) loser[min_vertex(g, w, e)] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!loser[v]) out.push_back(v);
  }
  return out;
}

/// Checks the outcome invariants: independence, full cover, witness soundness.
inline bool validate_outcome(const Hypergraph& g, const GreedyOutcome& out) {
  if (out.deletion_witness.size() != g.num_vertices()) return false;
  if (!is_independent(g, out.selected)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const bool sel = out.contains(v);
    const auto& wit = out.deletion_witness[v];
    if (sel == wit.has_value()) return false;
    if (!wit) continue;
    if (*wit >= g.num_edges() || !g.edge_contains(*wit, v)) return false;
    for (Vertex x : g.edge(*wit)) {
      if (x != v && !out.contains(x)) return false;
    }
  }
  return true;
}

}  // namespace hgreedy
