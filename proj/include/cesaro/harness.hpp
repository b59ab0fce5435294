#pragma once

#include <vector>

#include "cesaro/expansion.hpp"

namespace cesaro {

/// Cascade-iteration convergence probe: successive sup-norm differences and
/// their ratios (which approach lambda_* / rho).
struct ConvergenceProbe {
  std::vector<double> sup_diffs;
  std::vector<double> ratios;
  double mean_ratio = 0.0;  ///< geometric mean over the second half
  SolutionGrid grid;
};

ConvergenceProbe probe_fk_convergence(const DilationSystem& sys,
                                      double jsr_upper, int depth,
                                      int iterations,
                                      bool override_admissibility = false);

/// Brute-force comparison of Sigma_N against the expansion regular part.
/// The envelope constant is fitted on the first half of the log-range and
/// validated (within a factor 2) on the second half.
struct ComparisonReport {
  std::vector<int64_t> Ns;
  std::vector<double> errors;       ///< inf-norm of Sigma_N - A_N
  double fitted_c = 0.0;
  double worst_validation_ratio = 0.0;  ///< max error/envelope on 2nd half
  bool envelope_ok = false;
};

ComparisonReport compare_integers(const RRep& rep, const IntegerExpansion& exp,
                                  int64_t n_min, int64_t n_max,
                                  int max_samples = 1024);
ComparisonReport compare_integers(const CRep& rep, const IntegerExpansion& exp,
                                  int64_t n_min, int64_t n_max,
                                  int max_samples = 1024);

/// Empirical periodic-profile scatter: pairs ({log_B N}, scaled residual),
/// where the residual removes the expansion terms outside the selected
/// modulus class and divides by N^{log_B rho}.
struct PeriodicScatter {
  std::vector<double> t_frac;
  std::vector<CMat> values;
};

PeriodicScatter empirical_periodic(const RRep& rep, const IntegerExpansion& exp,
                                   double rho, int64_t n_min, int64_t n_max,
                                   int max_samples = 512);
PeriodicScatter empirical_periodic(const CRep& rep, const IntegerExpansion& exp,
                                   double rho, int64_t n_min, int64_t n_max,
                                   int max_samples = 512);

/// Pseudo-periodic planar-arc checks for the two-matrix rotation/dilation
/// family A_0 = cos(theta) I, A_1 = sin(theta) R_{pi/2}, C = E_1.
struct RosetteOptions {
  double theta = 0.0;       ///< angle; ignored when commensurable
  bool commensurable = false;
  int p = 0, q = 1;         ///< theta = pi * p / q in lowest terms
  int t_points = 1000;
  double t_base = 2.0;      ///< t grid spans [t_base, t_base + 1)
};

struct RosetteReport {
  double theta = 0.0;
  double period = 0.0;              ///< 2^{1-kappa} q (commensurable case)
  double max_period_defect = -1.0;  ///< sup |Gamma(t+P) - Gamma(t)|
  double max_antipodal_defect = -1.0;  ///< sup |Gamma(t+P/2)+Gamma(t)-2 Omega|
  double max_integer_defect = -1.0;    ///< closed form at integer t
  double min_shift_defect = -1.0;   ///< min over q<=64 of sup |Gamma(t+q)-Gamma(t)|
};

CRep make_rosette_rep(double theta);

RosetteReport rosette_check(const RosetteOptions& opts);

/// Envelope fit helper shared by the comparison routines: fits c on the
/// first half of the log-range and reports the worst second-half ratio.
struct EnvelopeFit {
  double c = 0.0;
  double worst_ratio = 0.0;
  bool ok = false;
};

EnvelopeFit fit_envelope(const std::vector<double>& log_positions,
                         const std::vector<double>& errors,
                         const std::vector<double>& envelope);

}  // namespace cesaro
