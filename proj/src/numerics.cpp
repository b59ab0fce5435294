#include "cesaro/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace cesaro {

namespace {

Eigen::MatrixXcd to_eigen(const CMat& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

std::vector<Complex> eigenvalues(const CMat& m) {
  assert(m.rows() == m.cols());
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::Structural, "eigenvalue computation failed");
  std::vector<Complex> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

double spectral_radius(const CMat& m) {
  double r = 0.0;
  for (const Complex& z : eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

double spectral_radius(const RMat& m) { return spectral_radius(to_complex(m)); }

double two_norm(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::MatrixXcd a = to_eigen(m);
  // Largest eigenvalue of the Gram matrix A^H A: deterministic self-adjoint
  // solve, then a square root.
  Eigen::MatrixXcd gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::Structural, "two-norm eigencomputation failed");
  double lmax = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lmax));
}

double two_norm(const RMat& m) { return two_norm(to_complex(m)); }

}  // namespace cesaro
