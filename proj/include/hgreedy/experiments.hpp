#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "hgreedy/closure.hpp"
#include "hgreedy/generators.hpp"
#include "hgreedy/girth.hpp"
#include "hgreedy/greedy.hpp"
#include "hgreedy/hypertree.hpp"
#include "hgreedy/oracle.hpp"
#include "hgreedy/rng.hpp"
#include "hgreedy/theory.hpp"

namespace hgreedy {

/// Instance or plan does not satisfy an operation's preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EscapeObservable {
  Vertex vertex = 0;
  std::size_t h = 0;
};

struct Observables {
  bool size = true;
  bool root_selected = false;
  std::optional<EscapeObservable> escape;
  bool per_vertex = false;
  bool keep_sizes = false;  // retain every trial's |I| (tail statistics)

  [[nodiscard]] bool any() const { return size || root_selected || escape || per_vertex || keep_sizes; }
};

struct TrialPlan {
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::size_t threads = 1;
  Observables observables;
  std::optional<Vertex> root;  // required for root_selected
};

struct TrialSummary {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_size_per_n = 0.0;
  double std_error = 0.0;  // of mean_size_per_n
  double empirical_variance_per_n = 0.0;
  std::optional<double> root_selected_rate;
  std::optional<double> root_stderr;
  std::optional<double> escape_rate;
  std::optional<double> escape_stderr;
  std::vector<double> per_vertex_rate;
  std::vector<std::uint32_t> sizes;
  std::uint64_t size_sum = 0;
  std::uint64_t root_count = 0;
  std::uint64_t escape_count = 0;
};

namespace detail {

template <class Fn>
void parallel_workers(std::size_t workers, Fn&& fn) {
  if (workers <= 1) {
    fn(std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

inline double rate_stderr(double p, std::size_t trials) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(trials));
}

}  // namespace detail

inline std::size_t default_threads() {
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/**
 * Independent greedy trials with seed_i = trial_seed(base_seed, i).
 *
 * Every accumulator is an integer count, so the summary is identical for any
 * thread count and any scheduling.
 */
inline TrialSummary run_trials(const Hypergraph& g, const TrialPlan& plan) {
  const auto& obs = plan.observables;
  if (plan.trials < 1) throw DomainError("trials must be >= 1");
  if (!obs.any()) throw DomainError("no observable requested");
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("empty instance");
  if (obs.root_selected && (!plan.root || *plan.root >= n)) {
    throw DomainError("root observable needs a rooted instance");
  }
  if (obs.escape && obs.escape->vertex >= n) throw DomainError("escape vertex out of range");

  std::vector<char> in_ball;
  if (obs.escape) {
    in_ball.assign(n, 0);
    for (Vertex x : neighborhood(g, obs.escape->vertex, obs.escape->h)) in_ball[x] = 1;
  }

  const std::size_t workers = std::clamp<std::size_t>(plan.threads, 1, plan.trials);
  struct Acc {
    std::uint64_t size_sum = 0;
    unsigned __int128 size_sq = 0;
    std::uint64_t root = 0;
    std::uint64_t escape = 0;
    std::vector<std::uint64_t> per_vertex;
  };
  std::vector<Acc> acc(workers);
  std::vector<std::uint32_t> sizes(obs.keep_sizes ? plan.trials : 0);

  detail::parallel_workers(workers, [&](std::size_t w) {
    GreedyEngine engine(g);
    Acc& a = acc[w];
    if (obs.per_vertex) a.per_vertex.assign(n, 0);
    std::vector<Vertex> ranking(n);
    for (std::size_t i = w; i < plan.trials; i += workers) {
      Rng rng(trial_seed(plan.base_seed, i));
      ranking = random_ranking(n, rng);
      const std::size_t s = engine.run(ranking);
      a.size_sum += s;
      a.size_sq += static_cast<unsigned __int128>(s) * s;
      if (obs.keep_sizes) sizes[i] = static_cast<std::uint32_t>(s);
      if (obs.root_selected && engine.is_selected(*plan.root)) ++a.root;
      if (obs.per_vertex) {
        for (Vertex v : engine.selection_order()) ++a.per_vertex[v];
      }
      if (obs.escape) {
        const auto wa = WeightAssignment::from_ranking(ranking);
        const Vertex seed[] = {obs.escape->vertex};
        const auto closure = influence_blocking_closure_vertices(g, wa, seed);
        if (std::any_of(closure.begin(), closure.end(), [&](Vertex x) { return !in_ball[x]; })) ++a.escape;
      }
    }
  });

  TrialSummary out;
  out.n = n;
  out.trials = plan.trials;
  out.seed = plan.base_seed;
  unsigned __int128 sq = 0;
  std::vector<std::uint64_t> per_vertex(obs.per_vertex ? n : 0, 0);
  for (const auto& a : acc) {
    out.size_sum += a.size_sum;
    sq += a.size_sq;
    out.root_count += a.root;
    out.escape_count += a.escape;
    for (std::size_t v = 0; v < a.per_vertex.size(); ++v) per_vertex[v] += a.per_vertex[v];
  }
  const auto t = static_cast<unsigned __int128>(plan.trials);
  const double td = static_cast<double>(plan.trials);
  const double nd = static_cast<double>(n);
  out.mean_size_per_n = static_cast<double>(out.size_sum) / td / nd;
  double var = 0.0;
  if (plan.trials > 1) {
    const unsigned __int128 sum = out.size_sum;
    const unsigned __int128 num = t * sq - sum * sum;  // >= 0 by Cauchy-Schwarz
    var = static_cast<double>(num) / (td * (td - 1.0));
  }
  out.empirical_variance_per_n = var / nd;
  out.std_error = std::sqrt(var / td) / nd;
  if (obs.root_selected) {
    const double p = static_cast<double>(out.root_count) / td;
    out.root_selected_rate = p;
    out.root_stderr = detail::rate_stderr(p, plan.trials);
  }
  if (obs.escape) {
    const double p = static_cast<double>(out.escape_count) / td;
    out.escape_rate = p;
    out.escape_stderr = detail::rate_stderr(p, plan.trials);
  }
  if (obs.per_vertex) {
    out.per_vertex_rate.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.per_vertex_rate[v] = static_cast<double>(per_vertex[v]) / td;
  }
  out.sizes = std::move(sizes);
  return out;
}

inline TrialSummary run_trials(const RootedHypertree& t, TrialPlan plan) {
  plan.root = t.root();
  return run_trials(t.graph(), plan);
}

enum class IntervalMethod { normal3sigma, clopper_pearson };

/// A rate estimate with its standard error and a confidence interval.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

/// Normal 3-sigma interval, or the exact Clopper-Pearson interval at the
/// matching two-sided level (about 99.73%).
inline Estimate binomial_estimate(std::uint64_t successes, std::size_t trials, IntervalMethod method) {
  Estimate e;
  e.value = static_cast<double>(successes) / static_cast<double>(trials);
  e.std_error = detail::rate_stderr(e.value, trials);
  if (method == IntervalMethod::normal3sigma) {
    e.lo = std::max(0.0, e.value - 3.0 * e.std_error);
    e.hi = std::min(1.0, e.value + 3.0 * e.std_error);
  } else {
    using boost::math::binomial_distribution;
    const double alpha = 0.0027;
    const auto t = static_cast<double>(trials);
    const auto k = static_cast<double>(successes);
    e.lo = binomial_distribution<>::find_lower_bound_on_p(t, k, alpha / 2);
    e.hi = binomial_distribution<>::find_upper_bound_on_p(t, k, alpha / 2);
  }
  return e;
}

/// Monte Carlo P[root in I(T)] for the tree described by `spec`.
inline Estimate estimate_root_probability(const TreeSpec& spec, std::size_t trials, std::uint64_t seed,
                                          std::size_t threads = 1,
                                          IntervalMethod method = IntervalMethod::normal3sigma) {
  const auto tree = make_tree(spec);
  TrialPlan plan;
  plan.trials = trials;
  plan.base_seed = seed;
  plan.threads = threads;
  plan.observables.size = false;
  plan.observables.root_selected = true;
  const auto s = run_trials(tree, plan);
  return binomial_estimate(s.root_count, trials, method);
}

/// Monte Carlo P[B({v}) leaves N_h(v)].
inline Estimate estimate_escape_probability(const Hypergraph& g, Vertex v, std::size_t h, std::size_t trials,
                                            std::uint64_t seed, std::size_t threads = 1,
                                            IntervalMethod method = IntervalMethod::normal3sigma) {
  TrialPlan plan;
  plan.trials = trials;
  plan.base_seed = seed;
  plan.threads = threads;
  plan.observables.size = false;
  plan.observables.escape = EscapeObservable{v, h};
  const auto s = run_trials(g, plan);
  return binomial_estimate(s.escape_count, trials, method);
}

enum class TailScale { log_n, quarter_power, sqrt_log_n };

inline double tail_scale(TailScale b, double n) {
  switch (b) {
    case TailScale::log_n: return std::log(n);
    case TailScale::quarter_power: return std::pow(n, 0.25);
    case TailScale::sqrt_log_n: return std::sqrt(std::log(n));
  }
  return 0.0;
}

inline std::string to_string(TailScale b) {
  switch (b) {
    case TailScale::log_n: return "log";
    case TailScale::quarter_power: return "quarter";
    case TailScale::sqrt_log_n: return "sqrtlog";
  }
  return "?";
}

inline TailScale parse_tail_scale(const std::string& s) {
  if (s == "log") return TailScale::log_n;
  if (s == "quarter") return TailScale::quarter_power;
  if (s == "sqrtlog") return TailScale::sqrt_log_n;
  throw DomainError("unknown tail scale '" + s + "' (expected log, quarter or sqrtlog)");
}

struct ConcentrationRow {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  double mean_per_n = 0.0;
  double var_per_n = 0.0;
  double threshold = 0.0;  // sqrt(n) b(n)
  double tail_rate = 0.0;
  double tail_stderr = 0.0;
};

using InstanceFamily = std::function<Hypergraph(std::size_t n, std::uint64_t seed)>;

/**
 * For each n, estimates P[ | |I| - mean | > sqrt(n) b(n) ] with the sample
 * mean standing in for E|I|, together with the empirical Var/n.
 */
inline std::vector<ConcentrationRow> concentration_sweep(const InstanceFamily& family,
                                                         const std::vector<std::size_t>& n_list, std::size_t trials,
                                                         std::uint64_t seed, TailScale b, std::size_t threads = 1) {
  std::vector<ConcentrationRow> rows;
  for (std::size_t idx = 0; idx < n_list.size(); ++idx) {
    const std::size_t n = n_list[idx];
    const auto g = family(n, trial_seed(seed, 1'000'000 + idx));
    if (!is_linear(g)) throw DomainError("concentration sweep needs linear instances");
    TrialPlan plan;
    plan.trials = trials;
    plan.base_seed = trial_seed(seed, idx);
    plan.threads = threads;
    plan.observables.keep_sizes = true;
    const auto s = run_trials(g, plan);
    ConcentrationRow row;
    row.n = n;
    row.edges = g.num_edges();
    row.max_degree = degree_profile(g).max_degree;
    row.mean_per_n = s.mean_size_per_n;
    row.var_per_n = s.empirical_variance_per_n;
    row.threshold = std::sqrt(static_cast<double>(n)) * tail_scale(b, static_cast<double>(n));
    const double mean = static_cast<double>(s.size_sum) / static_cast<double>(trials);
    std::size_t tail = 0;
    for (auto x : s.sizes) {
      if (std::abs(static_cast<double>(x) - mean) > row.threshold) ++tail;
    }
    row.tail_rate = static_cast<double>(tail) / static_cast<double>(trials);
    row.tail_stderr = detail::rate_stderr(row.tail_rate, trials);
    rows.push_back(row);
  }
  return rows;
}

enum class Verdict { pass, fail, vacuous };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::vacuous: return "VACUOUS";
  }
  return "?";
}

struct YieldReport {
  std::size_t n = 0;
  int d = 0;
  int r = 0;
  std::size_t girth = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_per_n = 0.0;
  double std_error = 0.0;
  double var_per_n = 0.0;
  std::optional<double> exact_mean_per_n;
  double f = 0.0;
  double epsilon = 0.0;
  double distance = 0.0;  // |mean_per_n - f|
  Verdict verdict = Verdict::fail;
};

/**
 * Compares the Monte Carlo yield of a d-regular (r+1)-uniform instance with
 * f(d,r) +- epsilon(g,d,r). An interval with epsilon >= f is labelled VACUOUS
 * and only the distance to f is reported. With `use_oracle` and n within the
 * enumeration limit the exact expectation decides the verdict.
 */
inline YieldReport yield_check(const Hypergraph& g, std::size_t trials, std::uint64_t seed,
                                     std::size_t threads = 1, bool use_oracle = false) {
  const auto uni = g.uniformity();
  if (!uni) throw DomainError("yield check needs a uniform hypergraph");
  const auto prof = degree_profile(g);
  if (!prof.is_regular || prof.max_degree < 2) throw DomainError("yield check needs a d-regular instance with d >= 2");
  const auto girth = berge_girth(g);
  if (girth.acyclic() || *girth.girth < 4) throw DomainError("yield check needs girth >= 4");

  YieldReport rep;
  rep.n = g.num_vertices();
  rep.d = static_cast<int>(prof.max_degree);
  rep.r = static_cast<int>(*uni) - 1;
  rep.girth = *girth.girth;
  rep.trials = trials;
  rep.seed = seed;
  TrialPlan plan;
  plan.trials = trials;
  plan.base_seed = seed;
  plan.threads = threads;
  const auto s = run_trials(g, plan);
  rep.mean_per_n = s.mean_size_per_n;
  rep.std_error = s.std_error;
  rep.var_per_n = s.empirical_variance_per_n;
  rep.f = f_value(rep.d, rep.r);
  rep.epsilon = epsilon_bound(static_cast<int>(std::min<std::size_t>(rep.girth, 1000)), rep.d, rep.r);

  double mean = rep.mean_per_n, slack = 3.0 * rep.std_error;
  if (use_oracle && rep.n <= kMaxPermutationVertices) {
    const auto ex = exact_greedy_stats(g, threads);
    rep.exact_mean_per_n = to_double(ex.expected_size) / static_cast<double>(rep.n);
    mean = *rep.exact_mean_per_n;
    slack = 0.0;
  }
  rep.distance = std::abs(mean - rep.f);
  if (rep.epsilon >= rep.f) {
    rep.verdict = Verdict::vacuous;
  } else {
    const bool inside = mean >= rep.f - rep.epsilon - slack && mean <= rep.f + rep.epsilon + slack;
    rep.verdict = inside ? Verdict::pass : Verdict::fail;
  }
  return rep;
}

struct LocalityReport {
  int h0 = 0;
  double vertex_rate = 0.0;
  double vertex_stderr = 0.0;
  double tree_rate = 0.0;
  double tree_stderr = 0.0;
  double bound = 0.0;
  bool within = false;  // |difference| <= bound + 3 combined standard errors
};

/// P[v in I(G)] against P[root in I(T~(d, h0+1))] on a regular instance of girth g.
inline LocalityReport locality_check(const Hypergraph& g, Vertex v, std::size_t trials, std::uint64_t seed,
                                     std::size_t threads = 1) {
  const auto uni = g.uniformity();
  const auto prof = degree_profile(g);
  if (!uni || !prof.is_regular || prof.max_degree < 2) throw DomainError("locality check needs a regular uniform instance");
  const auto girth = berge_girth(g);
  if (girth.acyclic() || *girth.girth < 4) throw DomainError("locality check needs girth >= 4");
  LocalityReport rep;
  const int d = static_cast<int>(prof.max_degree);
  const int r = static_cast<int>(*uni) - 1;
  rep.h0 = static_cast<int>((*girth.girth - 3) / 2);
  TrialPlan plan;
  plan.trials = trials;
  plan.base_seed = seed;
  plan.threads = threads;
  plan.observables.size = false;
  plan.observables.root_selected = true;
  plan.root = v;
  const auto sg = run_trials(g, plan);
  rep.vertex_rate = *sg.root_selected_rate;
  rep.vertex_stderr = *sg.root_stderr;
  const auto est = estimate_root_probability({r, d, rep.h0 + 1, TreeVariant::root_heavy}, trials,
                                             trial_seed(seed, 0xfeed), threads);
  rep.tree_rate = est.value;
  rep.tree_stderr = est.std_error;
  rep.bound = escape_probability_bound(d, r, rep.h0);
  const double slack = 3.0 * std::sqrt(rep.vertex_stderr * rep.vertex_stderr + rep.tree_stderr * rep.tree_stderr);
  rep.within = std::abs(rep.vertex_rate - rep.tree_rate) <= rep.bound + slack;
  return rep;
}

}  // namespace hgreedy
