#include "cesaro/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cesaro {
namespace {

// Log-spaced sample of integer indices in [n_min, n_max]; takes every index
// when the range is small enough.
std::vector<int64_t> sample_indices(int64_t n_min, int64_t n_max,
                                    int max_samples) {
  std::vector<int64_t> out;
  if (n_min < 1) n_min = 1;
  if (n_max < n_min) return out;
  if (n_max - n_min + 1 <= (1 << 16) &&
      n_max - n_min + 1 <= static_cast<int64_t>(max_samples)) {
    for (int64_t n = n_min; n <= n_max; ++n) out.push_back(n);
    return out;
  }
  std::set<int64_t> seen;
  double lo = std::log(static_cast<double>(n_min));
  double hi = std::log(static_cast<double>(n_max));
  for (int i = 0; i < max_samples; ++i) {
    double t = max_samples == 1 ? lo
                                : lo + (hi - lo) * i / (max_samples - 1);
    int64_t n = static_cast<int64_t>(std::llround(std::exp(t)));
    n = std::max(n_min, std::min(n_max, n));
    seen.insert(n);
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

double inf_norm(const CMat& v) {
  double m = 0.0;
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) m = std::max(m, std::abs(v(i, j)));
  return m;
}

template <class T>
ComparisonReport compare_impl(const LinearRep<T>& rep,
                              const IntegerExpansion& exp, int64_t n_min,
                              int64_t n_max, int max_samples) {
  ComparisonReport rep_out;
  std::vector<int64_t> samples = sample_indices(n_min, n_max, max_samples);
  RunningSumAccumulator<T> acc(rep);
  std::vector<double> logs, envs;
  for (int64_t n : samples) {
    while (acc.current_index() < n) acc.advance();
    Mat<T> sigma = acc.total();
    CMat approx = eval_expansion_integers(exp, n);
    double err = 0.0;
    for (int i = 0; i < rep.dim; ++i)
      err = std::max(err, std::abs(to_complex(sigma(i, 0)) - approx(i, 0)));
    rep_out.Ns.push_back(n);
    rep_out.errors.push_back(err);
    logs.push_back(std::log(static_cast<double>(n)));
    envs.push_back(exp.err.envelope_integers(n, rep.radix));
  }
  EnvelopeFit fit = fit_envelope(logs, rep_out.errors, envs);
  rep_out.fitted_c = fit.c;
  rep_out.worst_validation_ratio = fit.worst_ratio;
  rep_out.envelope_ok = fit.ok;
  return rep_out;
}

template <class T>
PeriodicScatter empirical_impl(const LinearRep<T>& rep,
                               const IntegerExpansion& exp, double rho,
                               int64_t n_min, int64_t n_max,
                               int max_samples) {
  // Remove the strictly-larger modulus classes from Sigma_N; what remains,
  // scaled by rho^{-log_B N}, traces the profile of the class `rho`.
  IntegerExpansion higher = exp;
  higher.base.terms.clear();
  for (const ExpansionTerm& term : exp.base.terms)
    if (std::abs(term.eigenvalue) > rho + kDefaultTol * std::max(1.0, rho))
      higher.base.terms.push_back(term);

  PeriodicScatter out;
  double logB = std::log(static_cast<double>(rep.radix));
  RunningSumAccumulator<T> acc(rep);
  for (int64_t n : sample_indices(n_min, n_max, max_samples)) {
    while (acc.current_index() < n) acc.advance();
    CMat v(rep.dim, 1);
    CMat approx = eval_expansion_integers(higher, n);
    for (int i = 0; i < rep.dim; ++i)
      v(i, 0) = to_complex(acc.total()(i, 0)) - approx(i, 0);
    double t = std::log(static_cast<double>(n)) / logB;
    v = v * Complex(std::pow(rho, -t), 0);
    out.t_frac.push_back(t - std::floor(t));
    out.values.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ConvergenceProbe probe_fk_convergence(const DilationSystem& sys,
                                      double jsr_upper, int depth,
                                      int iterations,
                                      bool override_admissibility) {
  CascadeResult res =
      cascade_grid(sys, jsr_upper, depth, iterations, override_admissibility);
  ConvergenceProbe probe;
  probe.sup_diffs = res.sup_diffs;
  probe.grid = std::move(res.grid);
  for (size_t i = 1; i < probe.sup_diffs.size(); ++i) {
    if (probe.sup_diffs[i - 1] <= 0) break;
    probe.ratios.push_back(probe.sup_diffs[i] / probe.sup_diffs[i - 1]);
  }
  if (!probe.ratios.empty()) {
    size_t half = probe.ratios.size() / 2;
    double acc = 0.0;
    int count = 0;
    for (size_t i = half; i < probe.ratios.size(); ++i) {
      if (probe.ratios[i] <= 0) continue;
      acc += std::log(probe.ratios[i]);
      ++count;
    }
    if (count > 0) probe.mean_ratio = std::exp(acc / count);
  }
  return probe;
}

EnvelopeFit fit_envelope(const std::vector<double>& log_positions,
                         const std::vector<double>& errors,
                         const std::vector<double>& envelope) {
  EnvelopeFit fit;
  if (log_positions.empty()) return fit;
  double lo = *std::min_element(log_positions.begin(), log_positions.end());
  double hi = *std::max_element(log_positions.begin(), log_positions.end());
  double mid = (lo + hi) / 2;
  for (size_t i = 0; i < log_positions.size(); ++i) {
    if (log_positions[i] > mid || envelope[i] <= 0) continue;
    fit.c = std::max(fit.c, errors[i] / envelope[i]);
  }
  bool ok = true;
  for (size_t i = 0; i < log_positions.size(); ++i) {
    if (log_positions[i] <= mid || envelope[i] <= 0) continue;
    double ratio = fit.c > 0 ? errors[i] / (fit.c * envelope[i])
                             : (errors[i] == 0 ? 0.0 : 1e300);
    fit.worst_ratio = std::max(fit.worst_ratio, ratio);
    if (ratio > 2.0) ok = false;
  }
  fit.ok = ok;
  return fit;
}

ComparisonReport compare_integers(const RRep& rep, const IntegerExpansion& exp,
                                  int64_t n_min, int64_t n_max,
                                  int max_samples) {
  return compare_impl(rep, exp, n_min, n_max, max_samples);
}

ComparisonReport compare_integers(const CRep& rep, const IntegerExpansion& exp,
                                  int64_t n_min, int64_t n_max,
                                  int max_samples) {
  return compare_impl(rep, exp, n_min, n_max, max_samples);
}

PeriodicScatter empirical_periodic(const RRep& rep, const IntegerExpansion& exp,
                                   double rho, int64_t n_min, int64_t n_max,
                                   int max_samples) {
  return empirical_impl(rep, exp, rho, n_min, n_max, max_samples);
}

PeriodicScatter empirical_periodic(const CRep& rep, const IntegerExpansion& exp,
                                   double rho, int64_t n_min, int64_t n_max,
                                   int max_samples) {
  return empirical_impl(rep, exp, rho, n_min, n_max, max_samples);
}

CRep make_rosette_rep(double theta) {
  CRep rep;
  rep.radix = 2;
  rep.dim = 2;
  rep.name = "rosette";
  double c = std::cos(theta), s = std::sin(theta);
  rep.L = CMat::row_vec({Complex(1), Complex(0)});
  CMat a0(2, 2), a1(2, 2);
  a0(0, 0) = c;
  a0(1, 1) = c;
  a1(0, 1) = -s;
  a1(1, 0) = s;
  rep.A = {a0, a1};
  rep.C = CMat::col_vec({Complex(1), Complex(0)});
  rep.eigen_hints = {Complex(c, s), Complex(c, -s)};
  return rep;
}

namespace {

CMat rosette_gamma(const IntegerExpansion& exp, double t) {
  return eval_regular_part(exp, t, 1e-8);
}

double defect(const CMat& a, const CMat& b) {
  return inf_norm(a - b);
}

}  // namespace

RosetteReport rosette_check(const RosetteOptions& opts) {
  RosetteReport report;
  double theta = opts.theta;
  double period = 0.0, half = 0.0;
  if (opts.commensurable) {
    int p = opts.p, q = opts.q;
    int kappa = 0;
    int pp = std::abs(p);
    while (pp % 2 == 0 && pp > 0) {
      pp /= 2;
      ++kappa;
    }
    theta = M_PI * p / q;
    period = std::ldexp(static_cast<double>(q), 1 - kappa);
    half = period / 2;
  }
  report.theta = theta;
  report.period = period;

  CRep rep = make_rosette_rep(theta);
  IntegerExpansion exp = lrtoae2(rep);

  // Dyadic t grid: t, t + period and t + period / 2 stay exact doubles.
  int n = 1;
  while (n < opts.t_points) n <<= 1;
  std::vector<double> grid;
  for (int i = 0; i < opts.t_points; ++i)
    grid.push_back(opts.t_base + static_cast<double>(i) / n);

  std::vector<CMat> base_vals;
  base_vals.reserve(grid.size());
  for (double t : grid) base_vals.push_back(rosette_gamma(exp, t));

  if (opts.commensurable) {
    double s2 = std::sin(theta / 2);
    CMat omega = CMat::col_vec(
        {Complex(s2 * std::sin(theta / 2)), Complex(s2 * std::cos(theta / 2))});
    report.max_period_defect = 0.0;
    report.max_antipodal_defect = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
      CMat shifted = rosette_gamma(exp, grid[i] + period);
      report.max_period_defect =
          std::max(report.max_period_defect, defect(shifted, base_vals[i]));
      CMat anti = rosette_gamma(exp, grid[i] + half);
      report.max_antipodal_defect = std::max(
          report.max_antipodal_defect, inf_norm(anti + base_vals[i] - omega * Complex(2)));
    }
    // Closed form at integer t.
    report.max_integer_defect = 0.0;
    for (int K = 2; K <= 12; ++K) {
      CMat gamma = rosette_gamma(exp, static_cast<double>(K));
      double c2 = std::cos(theta / 2);
      CMat expect = CMat::col_vec(
          {omega(0, 0) + Complex(c2 * std::cos((K - 0.5) * theta)),
           omega(1, 0) + Complex(c2 * std::sin((K - 0.5) * theta))});
      report.max_integer_defect =
          std::max(report.max_integer_defect, defect(gamma, expect));
    }
  } else {
    // No integer shift up to 64 may act as a period.
    report.min_shift_defect = 1e300;
    size_t coarse = std::min<size_t>(grid.size(), 64);
    size_t stride = std::max<size_t>(1, grid.size() / coarse);
    for (int shift = 1; shift <= 64; ++shift) {
      double worst = 0.0;
      for (size_t i = 0; i < grid.size(); i += stride) {
        CMat shifted = rosette_gamma(exp, grid[i] + shift);
        worst = std::max(worst, defect(shifted, base_vals[i]));
      }
      report.min_shift_defect = std::min(report.min_shift_defect, worst);
    }
  }
  return report;
}

}  // namespace cesaro
