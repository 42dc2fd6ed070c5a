#pragma once

// End-to-end acceptance checks. Each criterion is self-contained, seeded, and
// reports a one-line detail string; the CLI `verify` command and the
// acceptance test binary both run them from here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hgreedy/closure.hpp"
#include "hgreedy/experiments.hpp"
#include "hgreedy/generators.hpp"
#include "hgreedy/girth.hpp"
#include "hgreedy/greedy.hpp"
#include "hgreedy/hypertree.hpp"
#include "hgreedy/oracle.hpp"
#include "hgreedy/theory.hpp"

namespace hgreedy::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 20240601;
  std::size_t threads = 1;
};

namespace detail {

inline std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

inline std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

inline std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

/// Random (r+1)-uniform hypergraph on n vertices with m distinct edges (or fewer if crowded).
inline Hypergraph random_uniform(std::size_t n, std::size_t m, int r, Rng& rng) {
  const auto k = static_cast<std::size_t>(r + 1);
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> all(n);
  for (std::size_t tries = 0; edges.size() < m && tries < 40 * m; ++tries) {
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    shuffle(all, rng);
    std::vector<Vertex> e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

/// Random (r+1)-uniform hypertree: each new edge hangs r fresh vertices off a
/// vertex whose degree is still below d. The root is drawn uniformly.
inline RootedHypertree random_hypertree(std::size_t max_vertices, int d, int r, Rng& rng) {
  std::vector<std::vector<Vertex>> edges;
  std::vector<int> degree{0};
  std::vector<Vertex> open{0};
  const auto target = 1 + uniform_below(rng, max_vertices);
  while (!open.empty() && degree.size() + static_cast<std::size_t>(r) <= target) {
    const auto idx = uniform_below(rng, open.size());
    const Vertex p = open[idx];
    std::vector<Vertex> e{p};
    for (int j = 0; j < r; ++j) {
      e.push_back(static_cast<Vertex>(degree.size()));
      degree.push_back(1);
      if (d > 1) open.push_back(e.back());
    }
    if (++degree[p] >= d) open.erase(open.begin() + static_cast<std::ptrdiff_t>(idx));
    edges.push_back(std::move(e));
  }
  const std::size_t n = degree.size();
  const auto root = static_cast<Vertex>(uniform_below(rng, n));
  return RootedHypertree(Hypergraph(n, std::move(edges)), root);
}

/// Outer 5-cycle, spokes, inner pentagram.
inline Hypergraph petersen() {
  std::vector<std::vector<Vertex>> pe;
  for (Vertex i = 0; i < 5; ++i) {
    pe.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    pe.push_back({i, static_cast<Vertex>(i + 5)});
    pe.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return Hypergraph(10, std::move(pe));
}

inline Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace detail

inline CriterionResult increasing_path_counts(const Options&) {
  CriterionResult res{1, "increasing path counts", false, {}, 0.0};
  bool ok = true;
  std::string detail;
  for (auto [r, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto enumerated = count_increasing_assignments(r, l);
    std::int64_t denom = 1;
    for (int k = 1; k <= l; ++k) denom *= k * r + 1;
    const auto formula = factorial(static_cast<std::size_t>(l * r + 1)) / denom;
    ok = ok && enumerated == formula && increasing_path_probability(r, l).count == formula;
    detail += "(" + std::to_string(r) + "," + std::to_string(l) + ")=" + std::to_string(enumerated) + " ";
  }
  ok = ok && count_increasing_assignments(2, 1) == 2 && count_increasing_assignments(2, 2) == 8;
  res.passed = ok;
  res.detail = detail;
  return res;
}

inline CriterionResult graph_coincidence(const Options&) {
  CriterionResult res{2, "r=1 closed form for f", false, {}, 0.0};
  double worst = 0.0;
  for (int d = 3; d <= 10; ++d) {
    const double closed = (1.0 - std::pow(d - 1.0, -2.0 / (d - 2))) / 2.0;
    worst = std::max(worst, std::abs(f_value(d, 1) - closed));
  }
  res.passed = worst < 1e-8;
  res.detail = detail::fmt("max |f(d,1) - closed form| = %.3g over d=3..10", worst);
  return res;
}

inline CriterionResult numeric_triangle(const Options&) {
  CriterionResult res{3, "root finder / ODE / recursion agreement", false, {}, 0.0};
  double worst_ode = 0.0, worst_rec = 0.0, worst_res = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int r = 1; r <= 3; ++r) {
      const double u = solve_u(d, r);
      const auto ode = ode_G(d, r, 10000);
      const auto rec = iterate_to_limit(d - 1, r);
      worst_ode = std::max(worst_ode, std::abs(u - ode.grid.values.front()));
      worst_rec = std::max(worst_rec, std::abs(u - (1.0 - rec.limit.values.front())));
      worst_res = std::max(worst_res, ode.residual);
    }
  }
  res.passed = worst_ode < 1e-4 && worst_rec < 1e-4 && worst_res < 1e-6;
  res.detail = detail::fmt("max |u-G(0)| = %.3g, max |u-(1-F(0))| = %.3g, max residual = %.3g", worst_ode,
                           worst_rec, worst_res);
  return res;
}

inline CriterionResult closed_form_anchors(const Options&) {
  CriterionResult res{4, "closed-form anchors", false, {}, 0.0};
  const double t = std::tanh(1.0);
  const double e1 = std::abs(solve_u(2, 1) - (1.0 - std::exp(-1.0)));
  const double e2 = std::abs(solve_u(2, 2) - t);
  const double e3 = std::abs(f_value(2, 2) - (t - t * t * t / 3.0));
  res.passed = e1 < 1e-8 && e2 < 1e-8 && e3 < 1e-8;
  res.detail = detail::fmt("errors u(2,1) %.3g, u(2,2) %.3g, f(2,2) %.3g", e1, e2, e3);
  return res;
}

inline CriterionResult oracle_agreement(const Options& opt) {
  CriterionResult res{5, "oracle vs Monte Carlo", false, {}, 0.0};
  Rng rng(trial_seed(opt.seed, 5));
  double worst_z = 0.0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const int r = 1 + i % 2;
    const std::size_t n = 5 + uniform_below(rng, 4);
    const auto g = detail::random_uniform(n, 2 + uniform_below(rng, 2 * n), r, rng);
    const double exact = to_double(exact_greedy_stats(g, opt.threads).expected_size) / static_cast<double>(n);
    TrialPlan plan;
    plan.trials = 100000;
    plan.base_seed = trial_seed(opt.seed, 500 + i);
    plan.threads = opt.threads;
    const auto s = run_trials(g, plan);
    const double diff = std::abs(s.mean_size_per_n - exact);
    if (s.std_error == 0.0) {
      ok = ok && diff < 1e-12;
    } else {
      worst_z = std::max(worst_z, diff / s.std_error);
    }
  }
  ok = ok && worst_z <= 4.0;
  const auto star = make_tree({1, 2, 1, TreeVariant::full});
  const auto exact_root = exact_greedy_stats(star.graph()).selection_prob[star.root()];
  const auto mc = estimate_root_probability({1, 2, 1, TreeVariant::full}, 100000, trial_seed(opt.seed, 55), opt.threads);
  ok = ok && exact_root == Rational(1, 3) && std::abs(mc.value - 1.0 / 3.0) <= 0.015;
  res.passed = ok;
  res.detail = detail::fmt("worst |z| = %.3g over 20 instances; star root exact 1/3, MC %.5f", worst_z, mc.value);
  return res;
}

inline CriterionResult bonus_function_identity(const Options& opt) {
  CriterionResult res{6, "bonus function identity", false, {}, 0.0};
  Rng rng(trial_seed(opt.seed, 6));
  std::size_t mismatches = 0, selected = 0, largest = 0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 4));
    const int r = 1 + static_cast<int>(uniform_below(rng, 4));
    const auto t = detail::random_hypertree(200, d, r, rng);
    const auto w = WeightAssignment::uniform(t.graph().num_vertices(), rng);
    const double s = bonus_function(t, w)[t.root()];
    const bool in = greedy_by_ranking(t.graph(), w).contains(t.root());
    if (s != (in ? w.weight(t.root()) : 0.0)) ++mismatches;
    selected += in;
    largest = std::max(largest, t.graph().num_vertices());
  }
  res.passed = mismatches == 0;
  res.detail = std::to_string(mismatches) + " mismatches in 1000 trees (root selected in " + std::to_string(selected) +
               ", largest " + std::to_string(largest) + " vertices)";
  return res;
}

inline CriterionResult closure_locality(const Options& opt) {
  CriterionResult res{7, "influence-blocking closure", false, {}, 0.0};
  Rng rng(trial_seed(opt.seed, 7));
  std::size_t bad_restrict = 0, not_blocking = 0, not_minimal = 0;
  for (int i = 0; i < 1000; ++i) {
    const int r = 1 + static_cast<int>(uniform_below(rng, 3));
    const int d = 1 + static_cast<int>(uniform_below(rng, 4));
    const std::size_t n = static_cast<std::size_t>(r + 1) + uniform_below(rng, 60 - static_cast<std::size_t>(r));
    const auto g = random_linear_bounded_degree(r, d, n, rng());
    const auto w = WeightAssignment::from_ranking(random_ranking(n, rng));
    std::vector<Vertex> a;
    const auto a_size = 1 + uniform_below(rng, 3);
    for (std::size_t j = 0; j < a_size; ++j) a.push_back(static_cast<Vertex>(uniform_below(rng, n)));
    const auto b = influence_blocking_closure(g, w, a);
    if (!is_influence_blocking(g, w, b.to_parent)) ++not_blocking;
    const auto full = greedy_by_ranking(g, w);
    const auto local = greedy_by_ranking(b.graph, w.restrict_to(b.to_parent));
    for (Vertex v = 0; v < b.to_parent.size(); ++v) {
      if (local.contains(v) != full.contains(b.to_parent[v])) {
        ++bad_restrict;
        break;
      }
    }
  }
  // Minimality by filtering all vertex subsets of small instances.
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + uniform_below(rng, 4);
    const int r = 1 + static_cast<int>(uniform_below(rng, 2));
    const auto g = detail::random_uniform(n, 1 + uniform_below(rng, n), r, rng);
    const auto w = WeightAssignment::from_ranking(random_ranking(n, rng));
    const Vertex a[] = {static_cast<Vertex>(uniform_below(rng, n))};
    const auto b = influence_blocking_closure_vertices(g, w, a);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!(mask >> a[0] & 1u)) continue;
      std::vector<Vertex> vs;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) vs.push_back(v);
      }
      if (is_influence_blocking(g, w, vs) && !std::includes(vs.begin(), vs.end(), b.begin(), b.end())) {
        ++not_minimal;
      }
    }
  }
  res.passed = bad_restrict == 0 && not_blocking == 0 && not_minimal == 0;
  res.detail = "restriction mismatches " + std::to_string(bad_restrict) + ", non-blocking closures " +
               std::to_string(not_blocking) + ", minimality violations " + std::to_string(not_minimal);
  return res;
}

inline CriterionResult escape_bound(const Options& opt) {
  CriterionResult res{8, "escape probability bound", false, {}, 0.0};
  double worst_excess = -1.0;  // max of (rate - bound) / stderr-ish margin
  bool ok = true;
  int configs = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r <= 3; ++r) {
      const auto g = random_linear_bounded_degree(r, d, 300, trial_seed(opt.seed, 800 + 10 * d + r));
      const auto prof = degree_profile(g);
      const auto v = static_cast<Vertex>(
          std::max_element(prof.degrees.begin(), prof.degrees.end()) - prof.degrees.begin());
      for (int h = 0; h <= 3; ++h) {
        const auto est = estimate_escape_probability(g, v, static_cast<std::size_t>(h), 10000,
                                                     trial_seed(opt.seed, 8000 + 100 * d + 10 * r + h), opt.threads);
        const double bound = escape_probability_bound(static_cast<int>(prof.max_degree), r, h);
        ok = ok && est.value <= bound + 3.0 * est.std_error;
        worst_excess = std::max(worst_excess, est.value - bound);
        ++configs;
      }
    }
  }
  // Exact version on small instances, no slack.
  int exact_checks = 0;
  for (int i = 0; i < 12; ++i) {
    const int r = 1 + i % 2;
    const int d = 2 + i % 3;
    const auto g = random_linear_bounded_degree(r, d, 8, trial_seed(opt.seed, 880 + i));
    const auto dmax = static_cast<int>(degree_profile(g).max_degree);
    if (dmax == 0) continue;
    for (int h = 0; h <= 2; ++h) {
      const auto p = exact_escape_probability(g, 0, static_cast<std::size_t>(h), opt.threads);
      ok = ok && to_double(p) <= escape_probability_bound(dmax, r, h);
      ++exact_checks;
    }
  }
  res.passed = ok;
  res.detail = std::to_string(configs) + " MC configs, " + std::to_string(exact_checks) +
               " exact checks; max(rate - bound) = " + detail::fmt("%.4g", worst_excess);
  return res;
}

inline CriterionResult oscillation(const Options&) {
  CriterionResult res{9, "alternating recursion bounds", false, {}, 0.0};
  bool ok = true;
  double worst = 0.0;
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r <= 2; ++r) {
      const auto it = iterate_to_limit(d, r);
      ok = ok && it.oscillation_ok;
      worst = std::max(worst, it.max_oscillation_violation);
    }
  }
  res.passed = ok;
  res.detail = detail::fmt("largest violation beyond slack %.3g", worst);
  return res;
}

inline CriterionResult variance_and_tails(const Options& opt) {
  CriterionResult res{10, "variance bound and tail trend", false, {}, 0.0};
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 2; ++r) {
    const InstanceFamily family = [r](std::size_t n, std::uint64_t seed) {
      return random_linear_bounded_degree(r, 2, n, seed);
    };
    const auto rows = concentration_sweep(family, {100, 1000, 10000}, 10000, trial_seed(opt.seed, 10 + r),
                                          TailScale::log_n, opt.threads);
    const double bound = variance_bound_per_n(2, r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ok = ok && rows[i].var_per_n <= bound;
      if (i > 0) {
        const double noise = 3.0 * std::hypot(rows[i].tail_stderr, rows[i - 1].tail_stderr);
        ok = ok && rows[i].tail_rate <= rows[i - 1].tail_rate + noise;
      }
      detail += "r=" + std::to_string(r) + " n=" + std::to_string(rows[i].n) +
                detail::fmt(" var/n %.3g tail %.3g; ", rows[i].var_per_n, rows[i].tail_rate);
    }
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

inline CriterionResult asymptotic_trend(const Options&) {
  CriterionResult res{11, "large-d asymptotic trend", false, {}, 0.0};
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 3; ++r) {
    const auto rows = asymptotic_table(r, {100, 1000, 10000, 100000, 1000000});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ok = ok && std::abs(rows[i].ratio - 1.0) < std::abs(rows[i - 1].ratio - 1.0);
    }
    detail += "r=" + std::to_string(r) + detail::fmt(" ratio %.4f -> %.4f; ", rows.front().ratio, rows.back().ratio);
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

inline CriterionResult girth_certification(const Options&) {
  CriterionResult res{12, "girth certification", false, {}, 0.0};
  bool ok = true;
  int cases = 0;
  auto check = [&](const Hypergraph& g, std::size_t expected) {
    const auto gr = berge_girth(g);
    ok = ok && gr.girth == expected && gr.witness && validate_berge_cycle(g, *gr.witness);
    ++cases;
  };
  check(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), 2);
  for (int r = 1; r <= 3; ++r) {
    for (int k = 3; k <= 8; ++k) check(make_loose_berge_cycle(r, k), static_cast<std::size_t>(k));
  }
  check(detail::petersen(), 5);
  res.passed = ok;
  res.detail = std::to_string(cases) + " instances certified with validated witnesses";
  return res;
}

inline CriterionResult caro_tuza(const Options& opt) {
  CriterionResult res{13, "Caro-Tuza consistency", false, {}, 0.0};
  double worst = 0.0;
  for (int d = 0; d <= 20; ++d) {
    for (int r = 1; r <= 5; ++r) worst = std::max(worst, std::abs(caro_tuza_per_n(d, r) - caro_tuza_quadrature(d, r)));
  }
  bool ok = worst < 1e-10;
  std::vector<Hypergraph> instances{detail::petersen(), detail::fano(), make_loose_berge_cycle(1, 30),
                                    make_loose_berge_cycle(2, 12)};
  instances.push_back(random_regular_girth(1, 3, 20, 4, trial_seed(opt.seed, 1301)).graph);
  instances.push_back(random_regular_girth(2, 2, 30, 4, trial_seed(opt.seed, 1302)).graph);
  instances.push_back(random_regular_girth(2, 3, 30, 3, trial_seed(opt.seed, 1303)).graph);
  double min_margin = 1e9;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = instances[i];
    const int d = static_cast<int>(degree_profile(g).max_degree);
    const int r = static_cast<int>(*g.uniformity()) - 1;
    TrialPlan plan;
    plan.trials = 20000;
    plan.base_seed = trial_seed(opt.seed, 1310 + i);
    plan.threads = opt.threads;
    const auto s = run_trials(g, plan);
    const double ct = caro_tuza_per_n(d, r);
    ok = ok && s.mean_size_per_n >= ct - 3.0 * s.std_error;
    min_margin = std::min(min_margin, s.mean_size_per_n - ct);
  }
  res.passed = ok;
  res.detail = detail::fmt("series vs quadrature max error %.3g; min (mean/n - bound) = %.4f", worst, min_margin);
  return res;
}

using CriterionFn = CriterionResult (*)(const Options&);

inline const std::vector<CriterionFn>& all_criteria() {
  static const std::vector<CriterionFn> fns{
      increasing_path_counts, graph_coincidence,     numeric_triangle, closed_form_anchors, oracle_agreement,
      bonus_function_identity, closure_locality,     escape_bound,     oscillation,         variance_and_tails,
      asymptotic_trend,        girth_certification, caro_tuza};
  return fns;
}

/// Runs one criterion, timing it and turning exceptions into failures.
inline CriterionResult run_criterion(CriterionFn fn, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  try {
    res = fn(opt);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Runs the selected criteria (all when `ids` is empty), calling `on_result` after each.
inline std::vector<CriterionResult> run_all(const Options& opt, const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  const auto& fns = all_criteria();
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    auto res = run_criterion(fns[i], opt);
    if (res.id == 0) res.id = id;
    out.push_back(res);
    if (on_result) on_result(out.back());
  }
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%s] %2d %-42s %8.2fs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return buf + r.detail;
}

}  // namespace hgreedy::acceptance
