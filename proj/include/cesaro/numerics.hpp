#pragma once

#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

/// Eigenvalues of a square complex matrix (unordered, numeric).
std::vector<Complex> eigenvalues(const CMat& m);

/// Spectral radius (numeric).
double spectral_radius(const CMat& m);
double spectral_radius(const RMat& m);

/// Largest singular value, computed through the Gram matrix A^H A so that
/// the result is a deterministic self-adjoint eigencomputation.
double two_norm(const CMat& m);
double two_norm(const RMat& m);

}  // namespace cesaro
