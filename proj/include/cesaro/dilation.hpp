#pragma once

#include <memory>
#include <vector>

#include "cesaro/jsr.hpp"
#include "cesaro/linrep.hpp"
#include "cesaro/spectral.hpp"

namespace cesaro {

/// The two-scale (dilation) system attached to a Jordan chain of Q:
///   F(x) J = sum_{r < x_1} A_r V + A_{x_1} F(Bx - x_1),   x in [0, 1),
///   F(0) = 0,  F(1) = V,
/// where V stacks the chain vectors V^(0)..V^(nu-1) as columns and J is the
/// nu x nu Jordan block for the eigenvalue.  Values F(x) are d x nu.
struct DilationSystem {
  int radix = 2;
  std::vector<CMat> A;   ///< radix matrices
  Complex eigenvalue;    ///< rho * omega, must be nonzero
  CMat V;                ///< d x nu chain matrix

  int dim() const { return V.rows(); }
  int nu() const { return V.cols(); }

  // Precomputed helpers (filled by make_dilation_system).
  std::vector<CMat> partial;  ///< partial[r] = (sum_{s<r} A_s) V
  CMat Jinv;                  ///< inverse Jordan block
  std::vector<double> a_norm; ///< ||A_r||_inf, for remainder bounds
  double f_sup = 1.0;         ///< crude sup-norm estimate for F
};

DilationSystem make_dilation_system(const std::vector<CMat>& radix_matrices,
                                    const JordanChain& chain);
DilationSystem make_dilation_system(const CRep& rep, const JordanChain& chain);
DilationSystem make_dilation_system(const RRep& rep, const JordanChain& chain);

/// Uniform grid of F over [0, 1]: values[k] approximates F(k / B^depth).
struct SolutionGrid {
  int radix = 2;
  int depth = 0;
  std::vector<CMat> values;  ///< B^depth + 1 entries

  int64_t nodes() const { return static_cast<int64_t>(values.size()); }
  double node_x(int64_t k) const {
    return static_cast<double>(k) / static_cast<double>(nodes() - 1);
  }
};

/// F at an exactly B-adic point, by finite unrolling of the recursion
///   F(x) = sum_{k=1}^{m} A_{x_1} ... A_{x_{k-1}} (sum_{r<x_k} A_r V) J^{-k}.
/// Exact in the scalar arithmetic; no admissibility requirement.
CMat eval_exact_badic(const DilationSystem& sys, const Rational& x);

/// Solves the system on a depth-m grid by exact unrolling at every node.
/// Refuses (Error(Admissibility)) when |eigenvalue| <= jsr_upper, where no
/// continuous solution is guaranteed, unless `override_admissibility`.
SolutionGrid solve_jordan_system(const DilationSystem& sys, double jsr_upper,
                                 int depth, bool override_admissibility = false);

/// Cascade iteration G_{K+1} = L G_K from G_0(x) = x V, restricted to a
/// depth-m grid (the grid is invariant under the operator, so no
/// interpolation enters).  Returns the final grid and the sup-norm
/// differences between successive iterates.
struct CascadeResult {
  SolutionGrid grid;
  std::vector<double> sup_diffs;
};

CascadeResult cascade_grid(const DilationSystem& sys, double jsr_upper,
                           int depth, int iterations,
                           bool override_admissibility = false);

/// Piecewise-linear interpolation on the grid (values at non-nodes are
/// interpolated; nodes are returned as stored, matching the
/// right-continuous convention used for digit expansions).
CMat eval_grid(const SolutionGrid& grid, double x);

/// High-precision evaluation point in [0, 1]: wraps an MPFR number so the
/// radix digits stay meaningful far beyond double precision.
class EvalPoint {
 public:
  static EvalPoint from_rational(const Rational& x);
  static EvalPoint from_double(double x);
  /// B^e for e <= 0 (the frequent case x = B^{ {t} - 1 }).
  static EvalPoint from_power(int radix, double exponent);

  EvalPoint(const EvalPoint&);
  EvalPoint& operator=(const EvalPoint&);
  ~EvalPoint();

  /// Destructively pops the leading radix digit (x <- Bx - digit).
  int pop_digit(int radix);
  bool is_zero() const;
  double to_double() const;

 private:
  EvalPoint();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct AdaptiveEvalStats {
  int digits_used = 0;
  double error_bound = 0.0;  ///< heuristic bound on the truncation error
};

/// F at an arbitrary point: unrolls digits adaptively until the remainder
/// bound (product of matrix norms times ||J^-m|| times a sup estimate of F)
/// drops below `tol`, up to `max_digits`.  The achieved bound is reported.
CMat eval_adaptive(const DilationSystem& sys, const EvalPoint& x, double tol,
                   int max_digits = 900, AdaptiveEvalStats* stats = nullptr);

/// Hoelder exponent log_B(rho / lambda), clamped to (0, 1].  Requires
/// rho > lambda > 0.
double holder_exponent(double rho, double lambda, int radix);

/// Max residual of the two-scale relation over interior grid nodes.
double residual(const DilationSystem& sys, const SolutionGrid& grid);

}  // namespace cesaro
