#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/linrep.hpp"
#include "cesaro/numerics.hpp"

namespace cesaro {

/// Structure report for the Lie algebra generated by the radix matrices
/// under repeated brackets.
struct LieClosureReport {
  int closure_dim = 0;              ///< dim of the bracket closure g
  std::vector<int> derived_dims;    ///< dims of g, [g,g], [[g,g],[g,g]], ...
  bool solvable = false;            ///< derived series reaches 0
};

enum class Attained { Yes, No, Unknown };

/// Two-sided estimate of the joint spectral radius of {A_0, ..., A_{B-1}}.
struct JsrEstimate {
  double lower = 0.0;               ///< max rho(A_w)^(1/|w|) found
  double upper = 0.0;               ///< best max ||A_w||^(1/T) found
  NormKind witness_norm = NormKind::One;  ///< norm realizing `upper`
  int T = 1;                        ///< word length realizing `upper`
  Attained attained = Attained::Unknown;
  std::string certificate;          ///< human-readable justification
  bool exact = false;               ///< lower == upper certified exactly
  Rational exact_value = Rational(0);  ///< valid when `exact`
  std::optional<LieClosureReport> lie;
};

struct JsrOptions {
  int T_max = 4;
  double tol = kDefaultTol;
  std::vector<NormKind> norms = {NormKind::One, NormKind::Inf, NormKind::Two};
  bool use_lie_shortcut = true;
  int64_t product_budget = 1 << 20;  ///< max matrix products per sweep
};

/// max over |w| = T of ||A_w||^(1/T) for the given induced norm.
double lambda_T(const RRep& rep, int T, NormKind kind,
                int64_t product_budget = 1 << 20);
double lambda_T(const CRep& rep, int T, NormKind kind,
                int64_t product_budget = 1 << 20);

/// Exact variant: max over |w| = T of ||A_w|| itself (not the T-th root),
/// for the exactly computable norms (One, Inf) on rational reps.
Rational lambda_T_norm_power(const RRep& rep, int T, NormKind kind,
                             int64_t product_budget = 1 << 20);

/// max over 1 <= |w| <= T_max of rho(A_w)^(1/|w|) (numeric eigenvalues).
double jsr_lower_bound(const RRep& rep, int T_max,
                       int64_t product_budget = 1 << 20);
double jsr_lower_bound(const CRep& rep, int T_max,
                       int64_t product_budget = 1 << 20);

/// Bracket closure of the radix matrices; exact rational arithmetic.
LieClosureReport lie_algebra_closure(const RRep& rep);

/// Combined estimate.  On rational reps the solvable-Lie-algebra shortcut
/// certifies lambda_* = max_r rho(A_r), attained; otherwise norm sweeps give
/// the upper bound and spectral radii of short products the lower bound,
/// with attainment certified only by an exact rational coincidence.
JsrEstimate jsr_estimate(const RRep& rep, const JsrOptions& opts = {});
JsrEstimate jsr_estimate(const CRep& rep, const JsrOptions& opts = {});

}  // namespace cesaro
