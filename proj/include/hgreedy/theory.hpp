#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hgreedy/rational.hpp"

namespace hgreedy {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

// Sums H_d(u) until the rigorous geometric tail bound drops below tol, or the
// partial sum exceeds `stop_above` (then the partial sum is returned early).
inline double series_H_impl(int d, int r, double u, double tol, double stop_above) {
  const double ur = std::pow(u, r);
  CompensatedSum sum;
  double term = u;  // n = 0: C(d-2,d-2) u / 1
  for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
    sum.add(term);
    if (sum.value() > stop_above) return sum.value();
    const double nn = static_cast<double>(n);
    const double ratio = (nn + d - 1) / (nn + 1) * ur * (r * nn + 1) / (r * nn + r + 1);
    const double next = term * ratio;
    // Later ratios are bounded by u^r (m+d-1)/(m+1) for m >= n+1.
    const double bound = ur * (nn + d) / (nn + 2);
    if (bound < 1.0 && next * (1.0 + bound / (1.0 - bound)) < tol) {
      sum.add(next);
      return sum.value();
    }
    if (next == 0.0) return sum.value();
    term = next;
  }
  throw ConvergenceError("series H did not converge within 10^6 terms");
}

}  // namespace detail

/**
 * H_d(u) = sum_{n>=0} C(n+d-2, d-2) u^{rn+1} / (rn+1), for 0 <= u < 1.
 *
 * Terms are generated by their ratio, so no binomial is ever formed and large
 * d (1e6 and beyond) stays in range.
 */
inline double series_H(int d, int r, double u, double tol = 1e-15) {
  detail::require(d >= 2 && r >= 1, "series_H needs d >= 2, r >= 1");
  detail::require(u >= 0.0 && u < 1.0, "series_H needs 0 <= u < 1");
  if (u == 0.0) return 0.0;
  return detail::series_H_impl(d, r, u, tol, std::numeric_limits<double>::infinity());
}

/// Quadrature of H_d'(t) = (1 - t^r)^{-(d-1)} over [0, u]; independent route to series_H.
inline double series_H_quadrature(int d, int r, double u) {
  detail::require(d >= 2 && r >= 1, "series_H_quadrature needs d >= 2, r >= 1");
  detail::require(u >= 0.0 && u < 1.0, "series_H_quadrature needs 0 <= u < 1");
  auto f = [&](double t) { return std::pow(1.0 - std::pow(t, r), -(d - 1)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, u, 12, 1e-13);
}

/// Unique root in (0,1) of H_d(u) = 1, by bisection.
inline double solve_u(int d, int r, double tol = 1e-13) {
  detail::require(d >= 2 && r >= 1, "solve_u needs d >= 2, r >= 1");
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double h = detail::series_H_impl(d, r, mid, tol * 1e-3, 2.0);
    if (h < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// f(d,r) = u - u^{r+1}/(r+1), the per-vertex yield of the greedy process.
inline double f_value(int d, int r, double tol = 1e-13) {
  const double u = solve_u(d, r, tol);
  return u - std::pow(u, r + 1) / (r + 1);
}

/// d (d-1)^h / ( r * prod_{k=1}^{h+1} (k + 1/r) ), the locality escape bound.
inline double escape_probability_bound(int d, int r, int h) {
  detail::require(d >= 1 && r >= 1 && h >= 0, "escape bound needs d >= 1, r >= 1, h >= 0");
  const double inv_r = 1.0 / r;
  double value = static_cast<double>(d) / (r * (1.0 + inv_r));
  for (int k = 1; k <= h; ++k) value *= static_cast<double>(d - 1) / (k + 1 + inv_r);
  return value;
}

/// Locality error for girth g: the escape bound at h0 = floor((g-3)/2).
inline double epsilon_bound(int g, int d, int r) {
  detail::require(g >= 4 && d >= 2 && r >= 1, "epsilon needs g >= 4, d >= 2, r >= 1");
  return escape_probability_bound(d, r, (g - 3) / 2);
}

/// The displayed closed form with a sum over k <= floor((g-1)/2) in the denominator.
/// Reported next to epsilon_bound for comparison only.
inline double epsilon_sum_form(int g, int d, int r) {
  detail::require(g >= 4 && d >= 2 && r >= 1, "epsilon needs g >= 4, d >= 2, r >= 1");
  const double inv_r = 1.0 / r;
  double denom = 0.0;
  for (int k = 1; k <= (g - 1) / 2; ++k) denom += k + inv_r;
  return d * std::pow(d - 1.0, (g - 3) / 2) / (r * denom);
}

/// d! / prod_{i=1}^d (i + 1/r).
inline double caro_tuza_per_n(int d, int r) {
  detail::require(d >= 0 && r >= 1, "caro_tuza needs d >= 0, r >= 1");
  double value = 1.0;
  for (int i = 1; i <= d; ++i) value *= i / (i + 1.0 / r);
  return value;
}

/// Integral of (1 - x^r)^d over [0,1] by adaptive Gauss-Kronrod.
inline double caro_tuza_quadrature(int d, int r) {
  detail::require(d >= 0 && r >= 1, "caro_tuza needs d >= 0, r >= 1");
  auto f = [&](double x) { return std::pow(1.0 - std::pow(x, r), d); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 12, 1e-13);
}

/// Exact rational d! r^d / prod (ir + 1).
inline Rational caro_tuza_exact(int d, int r) {
  detail::require(d >= 0 && r >= 1, "caro_tuza needs d >= 0, r >= 1");
  Rational q(1);
  for (int i = 1; i <= d; ++i) q *= Rational(std::int64_t{i} * r, std::int64_t{i} * r + 1);
  return q;
}

/// 0.36 * 10^{-5/r} * (log d / (r d))^{1/r}; comparison constant only.
inline double akpss_per_n(double d, int r) {
  detail::require(d > 1.0 && r >= 1, "akpss needs d > 1, r >= 1");
  return 0.36 * std::pow(10.0, -5.0 / r) * std::pow(std::log(d) / (r * d), 1.0 / r);
}

/// (log d / (r d))^{1/r}, the large-d scale of u(d,r) and f(d,r).
inline double asymptotic_scale(double d, int r) {
  detail::require(d > 1.0 && r >= 1, "asymptotic scale needs d > 1, r >= 1");
  return std::pow(std::log(d) / (r * d), 1.0 / r);
}

/// 3 d^2 r^2 e^{r^2 (d-1)^3}: the per-vertex variance bound for linear max-degree-d inputs.
inline double variance_bound_per_n(int d, int r) {
  detail::require(d >= 2 && r >= 1, "variance bound needs d >= 2, r >= 1");
  const double dm1 = d - 1.0;
  return 3.0 * d * d * r * r * std::exp(static_cast<double>(r) * r * dm1 * dm1 * dm1);
}

struct PathIncreaseCount {
  std::int64_t count = 0;   // (lr+1)! / prod_{k=1}^l (kr+1)
  Rational probability{0};  // 1 / prod_{k=1}^l (kr+1)
};

/// Increasing weight assignments of a loose path of length l.
///
/// The count telescopes to prod_{k=1}^l prod_{j=(k-1)r+2}^{kr} j, which stays
/// an integer at every step.
inline PathIncreaseCount increasing_path_probability(int r, int l) {
  detail::require(r >= 1 && l >= 1, "increasing path needs r, l >= 1");
  PathIncreaseCount out;
  std::int64_t count = 1, denom = 1;
  for (int k = 1; k <= l; ++k) {
    for (int j = (k - 1) * r + 2; j <= k * r; ++j) count = checked_mul(count, j);
    denom = checked_mul(denom, std::int64_t{k} * r + 1);
  }
  out.count = count;
  out.probability = Rational(1, denom);
  return out;
}

/// Function sampled on the uniform grid i/M, i = 0..M.
struct FunctionGrid {
  std::vector<double> values;

  FunctionGrid() = default;
  explicit FunctionGrid(std::vector<double> v) : values(std::move(v)) {}

  template <class F>
  static FunctionGrid sample(std::size_t m, F&& f) {
    std::vector<double> v(m + 1);
    for (std::size_t i = 0; i <= m; ++i) v[i] = f(static_cast<double>(i) / static_cast<double>(m));
    return FunctionGrid(std::move(v));
  }

  [[nodiscard]] std::size_t grid_size() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  [[nodiscard]] double step() const noexcept { return 1.0 / static_cast<double>(grid_size()); }
  [[nodiscard]] double x(std::size_t i) const noexcept {
    return static_cast<double>(i) / static_cast<double>(grid_size());
  }

  /// Linear interpolation, clamped to [0,1].
  [[nodiscard]] double at(double x) const {
    const std::size_t m = grid_size();
    const double pos = std::clamp(x, 0.0, 1.0) * static_cast<double>(m);
    const auto i = std::min(static_cast<std::size_t>(pos), m == 0 ? 0 : m - 1);
    const double frac = pos - static_cast<double>(i);
    return values[i] + frac * (values[std::min(i + 1, m)] - values[i]);
  }

  [[nodiscard]] double sup_distance(const FunctionGrid& o) const {
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) d = std::max(d, std::abs(values[i] - o.values.at(i)));
    return d;
  }
};

struct RecursionStep {
  FunctionGrid grid;
  /// Richardson estimate of the trapezoid error (step h vs 2h); NaN for odd M.
  double quadrature_error = std::numeric_limits<double>::quiet_NaN();
};

/// One step x -> 1 - int_x^1 [1 - (1 - F(t))^r]^{d_exp} dt with the trapezoid rule.
inline RecursionStep recursion_step_detailed(const FunctionGrid& prev, int d_exp, int r) {
  const std::size_t m = prev.grid_size();
  detail::require(m >= 2, "grid needs at least 2 intervals");
  detail::require(d_exp >= 0 && r >= 1, "recursion needs d >= 0, r >= 1");
  constexpr double kSlack = 1e-12;
  for (std::size_t i = 0; i <= m; ++i) {
    const double v = prev.values[i];
    if (!(v >= -kSlack && v <= 1.0 + kSlack)) throw std::invalid_argument("grid values must lie in [0,1]");
    if (i > 0 && v < prev.values[i - 1] - kSlack) throw std::invalid_argument("grid must be non-decreasing");
  }
  std::vector<double> phi(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const double f = std::clamp(prev.values[i], 0.0, 1.0);
    phi[i] = std::pow(1.0 - std::pow(1.0 - f, r), d_exp);
  }
  const double h = prev.step();
  std::vector<double> integral(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) integral[i] = integral[i + 1] + 0.5 * h * (phi[i] + phi[i + 1]);

  RecursionStep out;
  if (m % 2 == 0) {
    double coarse = 0.0, err = 0.0;
    for (std::size_t i = m; i >= 2; i -= 2) {
      coarse += h * (phi[i - 2] + phi[i]);
      err = std::max(err, std::abs(integral[i - 2] - coarse) / 3.0);
    }
    out.quadrature_error = err;
  }
  std::vector<double> f(m + 1);
  for (std::size_t i = 0; i <= m; ++i) f[i] = std::clamp(1.0 - integral[i], 0.0, 1.0);
  for (std::size_t i = 1; i <= m; ++i) f[i] = std::max(f[i], f[i - 1]);
  out.grid = FunctionGrid(std::move(f));
  return out;
}

inline FunctionGrid recursion_step(const FunctionGrid& prev, int d_exp, int r) {
  return recursion_step_detailed(prev, d_exp, r).grid;
}

struct IterationLogEntry {
  int h = 0;
  double sup_change = 0.0;  // sup |F_h - F_{h-1}|
  double value_at_zero = 0.0;
  double quadrature_error = 0.0;
};

struct IterationResult {
  FunctionGrid limit;
  int steps = 0;
  bool converged = false;
  double envelope_gap = 0.0;  // sup distance between the last even and odd iterates
  bool oscillation_ok = true;
  double max_oscillation_violation = 0.0;  // largest excess beyond the allowed slack
  std::vector<IterationLogEntry> log;
};

/**
 * Iterates the distribution recursion from F_{d,0}(x) = x.
 *
 * At every step checks the alternating inequalities
 *   (-1)^h F_h <= (-1)^h F_{h+1}   and   (-1)^h F_h <= (-1)^h F_{h+2}
 * pointwise, allowing twice the estimated quadrature error.
 */
inline IterationResult iterate_to_limit(int d, int r, std::size_t grid_size = 4096, int max_h = 400,
                                        double tol = 1e-12) {
  detail::require(d >= 1 && r >= 1, "iterate_to_limit needs d >= 1, r >= 1");
  detail::require(grid_size >= 1000 && grid_size % 2 == 0, "iterate_to_limit needs an even grid_size >= 1000");
  IterationResult res;
  std::vector<FunctionGrid> hist{FunctionGrid::sample(grid_size, [](double x) { return x; })};
  std::vector<double> errs{0.0};
  constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();

  auto check = [&](const FunctionGrid& lower_idx, const FunctionGrid& upper_idx, int h, double slack) {
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < lower_idx.values.size(); ++i) {
      const double diff = sign * (upper_idx.values[i] - lower_idx.values[i]);
      if (diff < -slack) {
        res.oscillation_ok = false;
        res.max_oscillation_violation = std::max(res.max_oscillation_violation, -diff - slack);
      }
    }
  };

  for (int h = 1; h <= max_h; ++h) {
    auto step = recursion_step_detailed(hist.back(), d, r);
    const double change = step.grid.sup_distance(hist.back());
    hist.push_back(std::move(step.grid));
    errs.push_back(step.quadrature_error);
    res.log.push_back({h, change, hist.back().values.front(), step.quadrature_error});
    const std::size_t k = hist.size() - 1;  // index of F_h
    // F_{h-1} vs F_h
    check(hist[k - 1], hist[k], h - 1, 2.0 * std::max(errs[k], errs[k - 1]) + kRoundoff);
    // F_{h-2} vs F_h
    if (k >= 2) {
      check(hist[k - 2], hist[k], h - 2, 2.0 * std::max({errs[k], errs[k - 1], errs[k - 2]}) + kRoundoff);
    }
    res.steps = h;
    res.envelope_gap = change;
    if (hist.size() > 3) {
      hist.erase(hist.begin());
      errs.erase(errs.begin());
    }
    if (change < tol) {
      res.converged = true;
      break;
    }
  }
  res.limit = hist.back();
  return res;
}

struct OdeResult {
  FunctionGrid grid;
  double residual = 0.0;  // max over the grid of |1 - H_d(G(x)) - x|
};

/**
 * G' = -(1 - G^r)^{d-1}, G(1) = 0, integrated from x = 1 down to 0 with
 * classical fourth-order Runge-Kutta on the uniform grid.
 */
inline OdeResult ode_G(int d, int r, std::size_t grid_size = 10000) {
  detail::require(d >= 2 && r >= 1, "ode_G needs d >= 2, r >= 1");
  detail::require(grid_size >= 2, "ode_G needs grid_size >= 2");
  auto rhs = [&](double g) { return -std::pow(1.0 - std::pow(g, r), d - 1); };
  const double h = -1.0 / static_cast<double>(grid_size);
  std::vector<double> g(grid_size + 1, 0.0);
  for (std::size_t i = grid_size; i > 0; --i) {
    const double y = g[i];
    const double k1 = rhs(y);
    const double k2 = rhs(y + 0.5 * h * k1);
    const double k3 = rhs(y + 0.5 * h * k2);
    const double k4 = rhs(y + h * k3);
    g[i - 1] = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  OdeResult out;
  out.grid = FunctionGrid(std::move(g));
  for (std::size_t i = 0; i <= grid_size; ++i) {
    const double x = out.grid.x(i);
    out.residual = std::max(out.residual, std::abs(1.0 - series_H(d, r, out.grid.values[i]) - x));
  }
  return out;
}

/// Pointwise G - G^{r+1}/(r+1).
inline FunctionGrid g_tilde(const FunctionGrid& g, int r) {
  detail::require(r >= 1, "g_tilde needs r >= 1");
  std::vector<double> v(g.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = g.values[i];
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("g_tilde needs values in [0,1]");
    v[i] = x - std::pow(x, r + 1) / (r + 1);
  }
  return FunctionGrid(std::move(v));
}

struct AsymptoticRow {
  double d = 0.0;
  double u = 0.0;
  double f = 0.0;
  double scale = 0.0;    // (log d / (r d))^{1/r}
  double ratio = 0.0;    // u / scale
  double f_ratio = 0.0;  // f / scale
};

inline std::vector<AsymptoticRow> asymptotic_table(int r, const std::vector<int>& d_list) {
  std::vector<AsymptoticRow> rows;
  for (int d : d_list) {
    detail::require(d >= 3, "asymptotic table needs d >= 3");
    AsymptoticRow row;
    row.d = d;
    row.u = solve_u(d, r);
    row.f = row.u - std::pow(row.u, r + 1) / (r + 1);
    row.scale = asymptotic_scale(d, r);
    row.ratio = row.u / row.scale;
    row.f_ratio = row.f / row.scale;
    rows.push_back(row);
  }
  return rows;
}

/// Closed-form values bundled for one (d, r, g) triple.
struct TheoryReport {
  int d = 0, r = 0;
  std::optional<int> g;
  double u = 0.0;
  double f = 0.0;
  std::optional<double> epsilon;
  std::optional<double> epsilon_sum_form;
  std::optional<double> lower_bound_per_n;
  double caro_tuza_per_n = 0.0;
  double akpss_per_n = 0.0;
  double asymptotic_approx = 0.0;
};

inline TheoryReport theory_report(int d, int r, std::optional<int> g) {
  detail::require(d >= 2 && r >= 1, "theory needs d >= 2, r >= 1");
  TheoryReport rep;
  rep.d = d;
  rep.r = r;
  rep.g = g;
  rep.u = solve_u(d, r);
  rep.f = rep.u - std::pow(rep.u, r + 1) / (r + 1);
  if (g) {
    rep.epsilon = epsilon_bound(*g, d, r);
    rep.epsilon_sum_form = hgreedy::epsilon_sum_form(*g, d, r);
    rep.lower_bound_per_n = rep.f - *rep.epsilon;
  }
  rep.caro_tuza_per_n = hgreedy::caro_tuza_per_n(d, r);
  rep.akpss_per_n = hgreedy::akpss_per_n(d, r);
  rep.asymptotic_approx = asymptotic_scale(d, r);
  return rep;
}

}  // namespace hgreedy
