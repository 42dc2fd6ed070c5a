#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgreedy/acceptance.hpp"
#include "hgreedy/hgreedy.hpp"

namespace hgreedy::cli {

/// Bad flags or malformed spec strings; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- output tables ---------------------------------------------------------

struct Cell {
  enum class Kind { number, text, rational, empty } kind = Kind::empty;
  std::string text;
  std::int64_t num = 0, den = 1;
};

inline Cell number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return {Cell::Kind::number, buf};
}

inline Cell integer(std::int64_t x) { return {Cell::Kind::number, std::to_string(x)}; }
inline Cell text(std::string s) { return {Cell::Kind::text, std::move(s)}; }
inline Cell rational(const Rational& q) {
  return {Cell::Kind::rational, to_string(q), q.numerator(), q.denominator()};
}
inline Cell empty() { return {}; }
template <class T>
Cell maybe(const std::optional<T>& x) {
  return x ? number(static_cast<double>(*x)) : empty();
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + '"';
}

inline void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
    out << '\n';
  }
}

// Numbers are emitted with the same digits as the CSV form.
inline void write_json(std::ostream& out, const Table& t) {
  out << "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const Cell& c = t.rows[r][i];
      out << (i ? ", " : "") << json_string(t.columns[i]) << ": ";
      switch (c.kind) {
        case Cell::Kind::number: out << c.text; break;
        case Cell::Kind::text: out << json_string(c.text); break;
        case Cell::Kind::rational: out << "{\"num\": " << c.num << ", \"den\": " << c.den << "}"; break;
        case Cell::Kind::empty: out << "null"; break;
      }
    }
    out << "}";
  }
  out << (t.rows.empty() ? "]\n" : "\n]\n");
}

// ---- instance specs --------------------------------------------------------

struct Instance {
  std::string label;
  Hypergraph graph;
  std::optional<Vertex> root;  // tree root or path start
};

inline std::map<std::string, std::string> parse_params(const std::string& body, const std::string& kind) {
  std::map<std::string, std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(kind + ": expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

class Params {
 public:
  Params(std::string kind, std::map<std::string, std::string> kv) : kind_(std::move(kind)), kv_(std::move(kv)) {}

  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
      if (fallback) return *fallback;
      throw UsageError(kind_ + ": missing parameter '" + key + "'");
    }
    used_.push_back(key);
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(it->second, &pos);
      if (pos != it->second.size() || v < 0) throw std::invalid_argument("bad");
      return v;
    } catch (const std::exception&) {
      throw UsageError(kind_ + ": parameter '" + key + "' is not a non-negative integer");
    }
  }

  std::string str(const std::string& key, const std::string& fallback) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    used_.push_back(key);
    return it->second;
  }

  void finish() const {
    for (const auto& [k, v] : kv_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw UsageError(kind_ + ": unknown parameter '" + k + "'");
      }
    }
  }

 private:
  std::string kind_;
  std::map<std::string, std::string> kv_;
  std::vector<std::string> used_;
};

/**
 * Builds an instance from a compact spec string:
 *   tree:d=2,r=1,h=3,variant=full|tilde   loosecycle:r=2,k=5   loosepath:r=2,l=3
 *   linear:r=1,d=3,n=100   regular:r=1,d=3,n=20,g=5   file:path.hg
 * Random families draw from `seed`.
 */
inline Instance parse_instance(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("instance spec needs 'kind:params', got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  Instance inst;
  inst.label = spec;
  if (kind == "file") {
    inst.graph = load_hypergraph_file(body);
    return inst;
  }
  Params p(kind, parse_params(body, kind));
  auto as_int = [](long long v) { return static_cast<int>(v); };
  if (kind == "tree") {
    TreeSpec ts;
    ts.d = as_int(p.integer("d"));
    ts.r = as_int(p.integer("r", 1));
    ts.h = as_int(p.integer("h"));
    const auto variant = p.str("variant", "full");
    if (variant == "full") {
      ts.variant = TreeVariant::full;
    } else if (variant == "tilde") {
      ts.variant = TreeVariant::root_heavy;
    } else {
      throw UsageError("tree: variant must be full or tilde");
    }
    p.finish();
    auto t = make_tree(ts);
    inst.root = t.root();
    inst.graph = t.graph();
  } else if (kind == "loosecycle") {
    const int r = as_int(p.integer("r", 1));
    const int k = as_int(p.integer("k"));
    p.finish();
    inst.graph = make_loose_berge_cycle(r, k);
  } else if (kind == "loosepath") {
    const int r = as_int(p.integer("r", 1));
    const int l = as_int(p.integer("l"));
    p.finish();
    auto lp = make_loose_path(r, l);
    inst.root = lp.first;
    inst.graph = std::move(lp.graph);
  } else if (kind == "linear") {
    const int r = as_int(p.integer("r", 1));
    const int d = as_int(p.integer("d"));
    const auto n = static_cast<std::size_t>(p.integer("n"));
    p.finish();
    inst.graph = random_linear_bounded_degree(r, d, n, seed);
  } else if (kind == "regular") {
    const int r = as_int(p.integer("r", 1));
    const int d = as_int(p.integer("d"));
    const auto n = static_cast<std::size_t>(p.integer("n"));
    const auto g = static_cast<std::size_t>(p.integer("g", 3));
    p.finish();
    inst.graph = random_regular_girth(r, d, n, g, seed).graph;
  } else {
    throw UsageError("unknown instance kind '" + kind + "'");
  }
  return inst;
}

// ---- commands --------------------------------------------------------------

struct Common {
  std::optional<std::uint64_t> seed;
  std::size_t threads = default_threads();
  std::string format;  // empty = command default
  std::string out_path;

  [[nodiscard]] std::uint64_t seed_value() const {
    if (seed) return *seed;
    if (const char* s = std::getenv("HG_SEED")) {
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
        throw UsageError("HG_SEED is not an unsigned integer");
      }
    }
    return 1;
  }
};

inline void emit(std::ostream& out, const Common& c, const Table& t) {
  if (c.format == "json") {
    write_json(out, t);
  } else {
    write_csv(out, t);
  }
}

inline std::string witness_text(const BergeCycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    s += (i ? " v" : "v") + std::to_string(c.vertices[i]) + " e" + std::to_string(c.edges[i]);
  }
  return s;
}

inline Table theory_table(const std::vector<int>& ds, const std::vector<int>& rs, const std::vector<int>& gs) {
  Table t{{"d", "r", "g", "u", "f", "epsilon", "lower_per_n", "caro_tuza", "akpss", "asymptotic"}, {}};
  std::vector<std::optional<int>> girths;
  for (int g : gs) girths.emplace_back(g);
  if (girths.empty()) girths.emplace_back();
  for (int d : ds) {
    for (int r : rs) {
      for (const auto& g : girths) {
        const auto rep = theory_report(d, r, g);
        t.rows.push_back({integer(d), integer(r), g ? integer(*g) : empty(), number(rep.u), number(rep.f),
                          maybe(rep.epsilon), maybe(rep.lower_bound_per_n), number(rep.caro_tuza_per_n),
                          number(rep.akpss_per_n), number(rep.asymptotic_approx)});
      }
    }
  }
  return t;
}

inline std::vector<Cell> experiment_row(const Instance& inst, const YieldReport& r) {
  return {text(inst.label), integer(static_cast<std::int64_t>(r.n)),  integer(r.d),
          integer(r.r),     integer(static_cast<std::int64_t>(r.girth)), integer(static_cast<std::int64_t>(r.trials)),
          text(std::to_string(r.seed)), number(r.mean_per_n), number(r.std_error),
          number(r.var_per_n), number(r.f), number(r.epsilon),
          text(to_string(r.verdict))};
}

/// One experiments-schema row; theory columns stay empty when the instance is
/// outside the regular, girth >= 4 setting.
inline std::vector<Cell> simulate_row(const Instance& inst, std::size_t trials, std::uint64_t seed,
                                      std::size_t threads, bool use_oracle) {
  const Hypergraph& g = inst.graph;
  const auto prof = degree_profile(g);
  const auto gr = berge_girth(g);
  const bool eligible = g.uniformity() && prof.is_regular && prof.max_degree >= 2 && gr.girth && *gr.girth >= 4;
  if (eligible) return experiment_row(inst, yield_check(g, trials, seed, threads, use_oracle));
  TrialPlan plan;
  plan.trials = trials;
  plan.base_seed = seed;
  plan.threads = threads;
  const auto s = run_trials(g, plan);
  return {text(inst.label),
          integer(static_cast<std::int64_t>(g.num_vertices())),
          integer(static_cast<std::int64_t>(prof.max_degree)),
          g.uniformity() ? integer(static_cast<std::int64_t>(*g.uniformity()) - 1) : empty(),
          gr.girth ? integer(static_cast<std::int64_t>(*gr.girth)) : text("acyclic"),
          integer(static_cast<std::int64_t>(trials)),
          text(std::to_string(seed)),
          number(s.mean_size_per_n),
          number(s.std_error),
          number(s.empirical_variance_per_n),
          empty(),
          empty(),
          text("N/A")};
}

inline const std::vector<std::string> kExperimentColumns{"instance", "n",          "d",         "r",  "girth",
                                                         "trials",   "seed",       "mean_per_n", "stderr",
                                                         "var_per_n", "f",         "epsilon",   "verdict"};

inline Table estimate_table(const std::string& label, const Estimate& e, std::size_t trials, std::uint64_t seed,
                            std::vector<std::pair<std::string, Cell>> extra = {}) {
  Table t{{"instance", "trials", "seed", "rate", "stderr", "lo", "hi"}, {}};
  std::vector<Cell> row{text(label), integer(static_cast<std::int64_t>(trials)), text(std::to_string(seed)),
                        number(e.value), number(e.std_error), number(e.lo), number(e.hi)};
  for (auto& [k, v] : extra) {
    t.columns.push_back(k);
    row.push_back(std::move(v));
  }
  t.rows.push_back(std::move(row));
  return t;
}

/**
 * Parses argv and runs one subcommand, writing results to `out` (or --out)
 * and diagnostics to `err`. Returns 0 on success, 1 on domain errors, 2 on
 * usage errors.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized greedy independent sets in uniform hypergraphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Base seed (default: $HG_SEED, else 1)");
  app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", common.out_path, "Write output to this file");

  std::function<int(std::ostream&)> action;

  // theory
  auto* theory = app.add_subcommand("theory", "Closed-form quantities per (d, r, g)");
  std::vector<int> th_d, th_r{1}, th_g;
  theory->add_option("--d", th_d, "Degrees")->required()->delimiter(',');
  theory->add_option("--r", th_r, "Edge size minus one")->delimiter(',');
  theory->add_option("--g", th_g, "Girths")->delimiter(',');
  theory->callback([&] { action = [&](std::ostream& o) { emit(o, common, theory_table(th_d, th_r, th_g)); return 0; }; });

  // solve-u
  auto* solve = app.add_subcommand("solve-u", "Root u(d,r) with independent cross-checks");
  int su_d = 0, su_r = 1;
  std::size_t su_grid = 10000;
  solve->add_option("--d", su_d)->required();
  solve->add_option("--r", su_r);
  solve->add_option("--grid", su_grid, "ODE grid size");
  solve->callback([&] {
    action = [&](std::ostream& o) {
      const double u = solve_u(su_d, su_r);
      const auto ode = ode_G(su_d, su_r, su_grid);
      Table t{{"d", "r", "u", "f", "ode_G0", "ode_residual", "series_at_u", "quadrature_at_u"}, {}};
      t.rows.push_back({integer(su_d), integer(su_r), number(u), number(f_value(su_d, su_r)),
                        number(ode.grid.values.front()), number(ode.residual), number(series_H(su_d, su_r, u)),
                        number(series_H_quadrature(su_d, su_r, u))});
      emit(o, common, t);
      return 0;
    };
  });

  // recursion
  auto* rec = app.add_subcommand("recursion", "Iterate the tree distribution recursion to its limit");
  int rc_d = 2, rc_r = 1, rc_max_h = 400;
  std::size_t rc_grid = 4096;
  bool rc_log = false;
  rec->add_option("--d", rc_d, "Tree branching d (limit matches u(d+1, r))")->required();
  rec->add_option("--r", rc_r);
  rec->add_option("--grid", rc_grid, "Grid size (even)");
  rec->add_option("--max-h", rc_max_h, "Iteration cap");
  rec->add_flag("--log", rc_log, "Emit one row per iteration");
  rec->callback([&] {
    action = [&](std::ostream& o) {
      const auto it = iterate_to_limit(rc_d, rc_r, rc_grid, rc_max_h);
      if (rc_log) {
        Table t{{"h", "sup_change", "value_at_zero", "quadrature_error"}, {}};
        for (const auto& e : it.log) {
          t.rows.push_back({integer(e.h), number(e.sup_change), number(e.value_at_zero), number(e.quadrature_error)});
        }
        emit(o, common, t);
        return 0;
      }
      Table t{{"d", "r", "steps", "converged", "oscillation_ok", "envelope_gap", "F0", "u_from_limit", "u_solver"},
              {}};
      const double f0 = it.limit.values.front();
      t.rows.push_back({integer(rc_d), integer(rc_r), integer(it.steps), text(it.converged ? "true" : "false"),
                        text(it.oscillation_ok ? "true" : "false"), number(it.envelope_gap), number(f0),
                        number(1.0 - f0), number(solve_u(rc_d + 1, rc_r))});
      emit(o, common, t);
      return 0;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance in the text format");
  std::string gen_spec;
  gen->add_option("spec", gen_spec, "Instance spec, e.g. loosecycle:r=2,k=5")->required();
  gen->callback([&] {
    action = [&](std::ostream& o) {
      save_hypergraph(o, parse_instance(gen_spec, common.seed_value()).graph);
      return 0;
    };
  });

  // girth
  auto* girth = app.add_subcommand("girth", "Berge girth with a certificate");
  std::string gi_input, gi_spec;
  auto* gi_in = girth->add_option("--input", gi_input, "Hypergraph file");
  girth->add_option("--spec", gi_spec, "Instance spec")->excludes(gi_in);
  girth->callback([&] {
    action = [&](std::ostream& o) {
      if (gi_input.empty() && gi_spec.empty()) throw UsageError("girth needs --input or --spec");
      const auto g = gi_input.empty() ? parse_instance(gi_spec, common.seed_value()).graph
                                      : load_hypergraph_file(gi_input);
      const auto res = berge_girth(g);
      if (common.format.empty() || common.format == "text") {
        if (res.acyclic()) {
          o << "girth acyclic\n";
        } else {
          o << "girth " << *res.girth << "\nwitness " << witness_text(*res.witness) << '\n';
        }
        return 0;
      }
      Table t{{"girth", "witness"}, {}};
      t.rows.push_back({res.girth ? integer(static_cast<std::int64_t>(*res.girth)) : text("acyclic"),
                        res.witness ? text(witness_text(*res.witness)) : empty()});
      emit(o, common, t);
      return 0;
    };
  });

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo runs of the greedy process");
  std::vector<std::string> sm_specs;
  std::string sm_observe = "size", sm_ci = "normal", sm_tail = "log";
  std::size_t sm_trials = 10000;
  std::optional<Vertex> sm_vertex;
  std::size_t sm_h = 0;
  std::vector<std::size_t> sm_n;
  bool sm_oracle = false;
  sim->add_option("--spec", sm_specs, "Instance spec(s); file:path for a file")->required();
  sim->add_option("--observe", sm_observe, "What to measure")
      ->check(CLI::IsMember({"size", "root", "escape", "per-vertex", "locality", "concentration"}));
  sim->add_option("--trials", sm_trials)->check(CLI::PositiveNumber);
  sim->add_option("--vertex", sm_vertex, "Vertex for root/escape/locality");
  sim->add_option("--h", sm_h, "Neighbourhood radius for escape");
  sim->add_option("--ci", sm_ci, "Interval for rates")->check(CLI::IsMember({"normal", "clopper-pearson"}));
  sim->add_option("--n", sm_n, "Sizes for concentration; the spec must omit n")->delimiter(',');
  sim->add_option("--tail", sm_tail, "Tail scale b(n)")->check(CLI::IsMember({"log", "quarter", "sqrtlog"}));
  sim->add_flag("--oracle", sm_oracle, "Use exact enumeration for the verdict when n <= 10");
  sim->callback([&] {
    action = [&](std::ostream& o) {
      const auto seed = common.seed_value();
      const auto method = sm_ci == "normal" ? IntervalMethod::normal3sigma : IntervalMethod::clopper_pearson;
      if (sm_observe == "concentration") {
        if (sm_specs.size() != 1 || sm_n.empty()) throw UsageError("concentration needs one --spec and --n");
        const std::string base = sm_specs.front();
        const InstanceFamily family = [&](std::size_t n, std::uint64_t s) {
          const char* sep = base.back() == ':' ? "" : ",";
          return parse_instance(base + sep + "n=" + std::to_string(n), s).graph;
        };
        const auto rows = concentration_sweep(family, sm_n, sm_trials, seed, parse_tail_scale(sm_tail), common.threads);
        Table t{{"n", "edges", "max_degree", "mean_per_n", "var_per_n", "threshold", "tail_rate", "tail_stderr"}, {}};
        for (const auto& r : rows) {
          t.rows.push_back({integer(static_cast<std::int64_t>(r.n)), integer(static_cast<std::int64_t>(r.edges)),
                            integer(static_cast<std::int64_t>(r.max_degree)), number(r.mean_per_n),
                            number(r.var_per_n), number(r.threshold), number(r.tail_rate), number(r.tail_stderr)});
        }
        emit(o, common, t);
        return 0;
      }
      if (sm_observe == "size") {
        Table t{kExperimentColumns, {}};
        for (std::size_t i = 0; i < sm_specs.size(); ++i) {
          const auto inst = parse_instance(sm_specs[i], seed);
          t.rows.push_back(simulate_row(inst, sm_trials, trial_seed(seed, i), common.threads, sm_oracle));
        }
        emit(o, common, t);
        return 0;
      }
      if (sm_specs.size() != 1) throw UsageError("--observe " + sm_observe + " takes a single --spec");
      const auto inst = parse_instance(sm_specs.front(), seed);
      const auto vertex = sm_vertex ? sm_vertex : inst.root;
      if (sm_observe == "per-vertex") {
        TrialPlan plan;
        plan.trials = sm_trials;
        plan.base_seed = seed;
        plan.threads = common.threads;
        plan.observables.size = false;
        plan.observables.per_vertex = true;
        const auto s = run_trials(inst.graph, plan);
        Table t{{"vertex", "rate", "stderr"}, {}};
        for (std::size_t v = 0; v < s.per_vertex_rate.size(); ++v) {
          const double p = s.per_vertex_rate[v];
          t.rows.push_back({integer(static_cast<std::int64_t>(v)), number(p), number(detail::rate_stderr(p, sm_trials))});
        }
        emit(o, common, t);
        return 0;
      }
      if (!vertex) throw UsageError("--observe " + sm_observe + " needs --vertex");
      if (*vertex >= inst.graph.num_vertices()) throw DomainError("vertex out of range");
      if (sm_observe == "root") {
        TrialPlan plan;
        plan.trials = sm_trials;
        plan.base_seed = seed;
        plan.threads = common.threads;
        plan.observables.size = false;
        plan.observables.root_selected = true;
        plan.root = *vertex;
        const auto s = run_trials(inst.graph, plan);
        emit(o, common, estimate_table(inst.label, binomial_estimate(s.root_count, sm_trials, method), sm_trials, seed,
                                       {{"vertex", integer(*vertex)}}));
        return 0;
      }
      if (sm_observe == "escape") {
        const auto e = estimate_escape_probability(inst.graph, *vertex, sm_h, sm_trials, seed, common.threads, method);
        const auto prof = degree_profile(inst.graph);
        const auto uni = inst.graph.uniformity();
        Cell bound = empty();
        if (uni && prof.max_degree >= 1) {
          bound = number(escape_probability_bound(static_cast<int>(prof.max_degree), static_cast<int>(*uni) - 1,
                                                  static_cast<int>(sm_h)));
        }
        emit(o, common, estimate_table(inst.label, e, sm_trials, seed,
                                       {{"vertex", integer(*vertex)},
                                        {"h", integer(static_cast<std::int64_t>(sm_h))},
                                        {"bound", bound}}));
        return 0;
      }
      const auto rep = locality_check(inst.graph, *vertex, sm_trials, seed, common.threads);
      Table t{{"instance", "vertex", "h0", "vertex_rate", "vertex_stderr", "tree_rate", "tree_stderr", "bound", "within"},
              {}};
      t.rows.push_back({text(inst.label), integer(*vertex), integer(rep.h0), number(rep.vertex_rate),
                        number(rep.vertex_stderr), number(rep.tree_rate), number(rep.tree_stderr), number(rep.bound),
                        text(rep.within ? "true" : "false")});
      emit(o, common, t);
      return 0;
    };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact enumeration on small instances");
  std::string or_mode = "stats", or_spec;
  int or_r = 1, or_l = 1;
  Vertex or_vertex = 0;
  std::size_t or_h = 0;
  orc->add_option("--mode", or_mode)->check(CLI::IsMember({"paths", "stats", "alpha", "escape"}));
  orc->add_option("--spec", or_spec, "Instance spec (stats, alpha, escape)");
  orc->add_option("--r", or_r);
  orc->add_option("--l", or_l);
  orc->add_option("--vertex", or_vertex);
  orc->add_option("--h", or_h);
  orc->callback([&] {
    action = [&](std::ostream& o) {
      const bool human = common.format.empty() || common.format == "text";
      if (or_mode == "paths") {
        const auto count = count_increasing_assignments(or_r, or_l);
        const auto closed = increasing_path_probability(or_r, or_l);
        if (count != closed.count) throw std::logic_error("enumeration disagrees with the closed form");
        if (human) {
          o << "count " << count << ", probability " << to_string(closed.probability) << '\n';
        } else {
          emit(o, common, Table{{"r", "l", "count", "probability"},
                                {{integer(or_r), integer(or_l), integer(count), rational(closed.probability)}}});
        }
        return 0;
      }
      if (or_spec.empty()) throw UsageError("--mode " + or_mode + " needs --spec");
      const auto inst = parse_instance(or_spec, common.seed_value());
      if (or_mode == "stats") {
        const auto s = exact_greedy_stats(inst.graph, common.threads);
        if (human) {
          o << "expected size " << to_string(s.expected_size) << " (" << to_double(s.expected_size) << ")\n";
          for (std::size_t v = 0; v < s.selection_prob.size(); ++v) {
            o << "vertex " << v << ' ' << to_string(s.selection_prob[v]) << '\n';
          }
        } else {
          Table t{{"vertex", "probability"}, {}};
          for (std::size_t v = 0; v < s.selection_prob.size(); ++v) {
            t.rows.push_back({integer(static_cast<std::int64_t>(v)), rational(s.selection_prob[v])});
          }
          t.rows.push_back({text("total"), rational(s.expected_size)});
          emit(o, common, t);
        }
        return 0;
      }
      if (or_mode == "alpha") {
        const auto a = exact_alpha(inst.graph);
        std::string w;
        for (Vertex v : a.witness) w += (w.empty() ? "" : " ") + std::to_string(v);
        if (human) {
          o << "alpha " << a.alpha << "\nwitness " << w << '\n';
        } else {
          emit(o, common, Table{{"alpha", "witness"}, {{integer(static_cast<std::int64_t>(a.alpha)), text(w)}}});
        }
        return 0;
      }
      const auto p = exact_escape_probability(inst.graph, or_vertex, or_h, common.threads);
      if (human) {
        o << "probability " << to_string(p) << '\n';
      } else {
        emit(o, common, Table{{"vertex", "h", "probability"},
                              {{integer(or_vertex), integer(static_cast<std::int64_t>(or_h)), rational(p)}}});
      }
      return 0;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  std::vector<int> ver_only;
  ver->add_option("--only", ver_only, "Criterion ids")->delimiter(',');
  ver->callback([&] {
    action = [&](std::ostream& o) {
      acceptance::Options opt;
      opt.threads = common.threads;
      if (common.seed || std::getenv("HG_SEED")) opt.seed = common.seed_value();
      const bool human = common.format.empty() || common.format == "text";
      const auto results = acceptance::run_all(opt, ver_only, [&](const acceptance::CriterionResult& r) {
        if (human) o << acceptance::format_line(r) << std::endl;
      });
      std::size_t passed = 0;
      Table t{{"id", "name", "passed", "seconds", "detail"}, {}};
      for (const auto& r : results) {
        passed += r.passed;
        t.rows.push_back({integer(r.id), text(r.name), text(r.passed ? "true" : "false"), number(r.seconds),
                          text(r.detail)});
      }
      if (human) {
        o << passed << '/' << results.size() << " criteria passed\n";
      } else {
        emit(o, common, t);
      }
      return passed == results.size() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (common.out_path.empty()) return action(out);
    std::ofstream file(common.out_path);
    if (!file) throw DomainError("cannot open " + common.out_path + " for writing");
    return action(file);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hgreedy::cli
