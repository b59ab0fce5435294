#pragma once

#include <vector>

#include "cesaro/dilation.hpp"
#include "cesaro/jsr.hpp"
#include "cesaro/linrep.hpp"
#include "cesaro/spectral.hpp"

namespace cesaro {

/// Error envelope of a truncated expansion.
struct ErrorClass {
  enum class Kind {
    ExactZero,  ///< expansion is exact (e.g. C = 0)
    Power,      ///< O(lambda^K), resp. O(N^{log_B lambda})
    PowerLog,   ///< O(lambda_*^K K^m), resp. O(N^{log_B lambda_*} log^m N)
  };
  Kind kind = Kind::Power;
  double rate = 0.0;  ///< lambda, or lambda_* in the attained case
  int log_power = 0;  ///< m
  bool rate_near_one = false;  ///< |rate - 1| under tolerance; >=1 branch used

  /// Envelope value at word length K (resp. index N).
  double envelope_words(int64_t K) const;
  double envelope_integers(int64_t N, int radix) const;
};

/// One retained scale: the component of C on a Jordan-basis vector V^(j)
/// (height j+1) of a chain whose eigenvalue modulus exceeds lambda.
struct ExpansionTerm {
  int chain = 0;        ///< index into systems/grids
  Complex gamma;        ///< coefficient of C on the basis vector
  Complex eigenvalue;   ///< rho * omega
  int height = 1;       ///< j + 1
};

struct ExpansionOptions {
  int grid_depth = -1;  ///< -1: deepest depth with at most 4096 cells
  double tol = kDefaultTol;
  JsrOptions jsr;
};

/// Asymptotic expansion of the word-indexed running sums S_K(x).
struct WordExpansion {
  int radix = 2;
  int dim = 0;
  std::vector<DilationSystem> systems;  ///< one per retained chain
  std::vector<SolutionGrid> grids;      ///< parallel to systems
  std::vector<ExpansionTerm> terms;
  double lambda = 0.0;                  ///< truncation rate
  bool lambda_exact = false;
  Rational lambda_rational = Rational(0);
  JsrEstimate jsr;
  ErrorClass err;
};

WordExpansion lrtoae1(const RRep& rep, const ExpansionOptions& opts = {});
WordExpansion lrtoae1(const CRep& rep, const ExpansionOptions& opts = {});

/// Evaluates the expansion main part at word length K and x in [0, 1],
/// interpolating the solution grids piecewise-linearly.
CMat eval_expansion_words(const WordExpansion& exp, int64_t K, double x);

ErrorClass error_class(const WordExpansion& exp);

/// Asymptotic expansion of the integer-indexed sums Sigma_N.
struct IntegerExpansion {
  WordExpansion base;
  CMat A0;                    ///< radix matrix for digit 0
  bool keep_constant = false; ///< lambda < 1: O(1) blocks are significant
  ErrorClass err;             ///< in the N scale
};

IntegerExpansion lrtoae2(const RRep& rep, const ExpansionOptions& opts = {});
IntegerExpansion lrtoae2(const CRep& rep, const ExpansionOptions& opts = {});

/// Regular part A_N at an integer index (x = N / B^{K+1} is B-adic, so the
/// dilation solutions are evaluated by exact unrolling).
CMat eval_expansion_integers(const IntegerExpansion& exp, int64_t N);

/// Regular part as a continuous function of t = log_B N (K = floor(t),
/// x = B^{ {t} - 1 } evaluated adaptively in high precision).
CMat eval_regular_part(const IntegerExpansion& exp, double t,
                       double tol = 1e-9);

ErrorClass error_class(const IntegerExpansion& exp);

/// Periodic (or pseudo-periodic) profile of the modulus class `rho`:
///   Phi(t) = (modulus-rho part of the regular part at t) / rho^t.
struct PeriodicProfile {
  double rho = 1.0;
  bool periodic = false;      ///< all omegas are roots of unity, heights 1
  int period = 0;             ///< least q <= 64 with |omega^q - 1| <= tol
  std::vector<double> t;
  std::vector<CMat> values;
};

PeriodicProfile periodic_profile(const IntegerExpansion& exp, double rho,
                                 const std::vector<double>& t_samples,
                                 double tol = kDefaultTol);

}  // namespace cesaro
