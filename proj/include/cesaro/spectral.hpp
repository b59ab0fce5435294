#pragma once

#include <utility>
#include <vector>

#include "cesaro/matrix.hpp"
#include "cesaro/numerics.hpp"

namespace cesaro {

/// Monic characteristic polynomial of a rational matrix, exact
/// (Faddeev-LeVerrier).  coeffs[k] multiplies x^k; coeffs[d] == 1.
std::vector<Rational> char_poly_rational(const RMat& m);

/// All rational roots of a rational polynomial, with multiplicities,
/// found by the rational-root test and exact deflation.  Sorted by value.
std::vector<std::pair<Rational, int>> rational_roots(
    std::vector<Rational> coeffs);

/// Distinct eigenvalues of Q with algebraic multiplicities.  Rational
/// eigenvalues of rational matrices are certified exactly through the
/// characteristic polynomial; the remainder is numeric, clustered within
/// the tolerance.  Hints (known exact eigenvalues) snap nearby numeric
/// values.
struct EigenStructure {
  std::vector<Complex> values;         ///< distinct eigenvalues
  std::vector<int> multiplicity;       ///< algebraic multiplicities
  std::vector<bool> exact;             ///< certified rational entries
  std::vector<Rational> rational_value;  ///< parallel; valid where exact
  int dim = 0;
};

EigenStructure eigen_structure(const RMat& q,
                               const std::vector<Complex>& hints = {},
                               double tol = kDefaultTol);
EigenStructure eigen_structure(const CMat& q,
                               const std::vector<Complex>& hints = {},
                               double tol = kDefaultTol);

/// A single Jordan chain (V^(0), ..., V^(nu-1)):
///   Q V^(0) = a V^(0),   Q V^(j) = a V^(j) + V^(j-1)  for j >= 1,
/// where a = rho * omega is the eigenvalue.  Chains are normalized so the
/// first maximal-modulus entry of the top vector V^(nu-1) equals 1.
struct JordanChain {
  Complex eigenvalue;
  std::vector<CMat> vectors;  ///< V^(0) .. V^(nu-1), each d x 1
  int height() const { return static_cast<int>(vectors.size()); }

  bool exact = false;         ///< rational eigenvalue, exact chain available
  Rational eigen_rational = Rational(0);
  std::vector<RMat> vectors_exact;
};

/// Full Jordan basis of Q as a list of chains.  The filtration
/// ker (Q - aI) subset ker (Q - aI)^2 subset ... is computed exactly for
/// rational eigenvalues of rational matrices, numerically otherwise; pivot
/// choices follow a deterministic (nullspace column) order.
std::vector<JordanChain> jordan_basis(const RMat& q,
                                      const EigenStructure& es,
                                      double tol = kDefaultTol);
std::vector<JordanChain> jordan_basis(const CMat& q,
                                      const EigenStructure& es,
                                      double tol = kDefaultTol);

/// Coefficients of C in the Jordan basis: C = sum_chains sum_j
/// gamma[chain][j] V_chain^(j).
struct CDecomposition {
  std::vector<JordanChain> chains;
  std::vector<std::vector<Complex>> gamma;
  bool exact = false;                       ///< all-rational decomposition
  std::vector<std::vector<Rational>> gamma_exact;
};

CDecomposition decompose_C(const std::vector<JordanChain>& chains,
                           const CMat& c, double tol = kDefaultTol);
CDecomposition decompose_C(const std::vector<JordanChain>& chains,
                           const RMat& c, double tol = kDefaultTol);

/// Q^K V^(nu-1) expanded over the chain:
///   sum_j binom(K, nu-1-j) a^(K-nu+1+j) V^(j),
/// with binom(K, m) = 0 for K < m.
CMat qk_on_chain(const JordanChain& chain, int64_t K);

/// sum_{k=0}^{K} Q^k V^(nu-1), evaluated through the elementary summation
/// formula (separate branches for eigenvalue == 1 and != 1).
CMat geometric_sum_on_chain(const JordanChain& chain, int64_t K,
                            double tol = kDefaultTol);

/// Scalar helper: sum_{k=ell}^{K} binom(k, ell) alpha^(k-ell).
Complex geometric_binomial_sum(Complex alpha, int64_t K, int ell,
                               double tol = kDefaultTol);

/// binom(K, m) as a double (m small).
double binom(int64_t K, int m);

}  // namespace cesaro
