#include "cesaro/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "cesaro/numerics.hpp"

namespace cesaro {

CMat to_complex(const RMat& m) {
  CMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

double max_imag_abs(const CMat& m) {
  double v = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      v = std::max(v, std::abs(m(i, j).imag()));
  return v;
}

Rational induced_norm_exact(const RMat& m, NormKind kind) {
  if (kind == NormKind::Two)
    throw Error(ErrorKind::Structural,
                "two-norm is not available in exact arithmetic");
  Rational best(0);
  if (kind == NormKind::One) {
    for (int j = 0; j < m.cols(); ++j) {
      Rational s(0);
      for (int i = 0; i < m.rows(); ++i) s += abs_exact(m(i, j));
      if (s > best) best = s;
    }
  } else {
    for (int i = 0; i < m.rows(); ++i) {
      Rational s(0);
      for (int j = 0; j < m.cols(); ++j) s += abs_exact(m(i, j));
      if (s > best) best = s;
    }
  }
  return best;
}

double induced_norm(const CMat& m, NormKind kind) {
  if (kind == NormKind::Two) return two_norm(m);
  double best = 0.0;
  if (kind == NormKind::One) {
    for (int j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (int i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
  } else {
    for (int i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
  }
  return best;
}

double induced_norm(const RMat& m, NormKind kind) {
  if (kind == NormKind::Two) return two_norm(m);
  return to_double(induced_norm_exact(m, kind));
}

double frobenius(const CMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RMat m) { return static_cast<int>(rref(m).size()); }

RMat nullspace(const RMat& m) {
  RMat red = m;
  std::vector<int> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = m.cols() - static_cast<int>(pivots.size());
  RMat basis(m.cols(), nfree);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = Rational(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis(pivots[pi], k) = -red(static_cast<int>(pi), c);
    ++k;
  }
  return basis;
}

bool solve(const RMat& a, const RMat& b, RMat& x) {
  assert(a.rows() == b.rows());
  RMat aug = RMat::hcat(a, b);
  std::vector<int> pivots = rref(aug);
  // Any pivot in the b-block means inconsistency.
  for (int c : pivots)
    if (c >= a.cols()) return false;
  x = RMat(a.cols(), b.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[pi], j) = aug(static_cast<int>(pi), a.cols() + j);
  return true;
}

RMat inverse(const RMat& m) {
  assert(m.rows() == m.cols());
  RMat x;
  if (!solve(m, RMat::identity(m.rows()), x) || rank(m) != m.rows())
    throw Error(ErrorKind::Structural, "matrix is singular");
  return x;
}

namespace {

Eigen::MatrixXcd to_eigen(const CMat& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

CMat from_eigen(const Eigen::MatrixXcd& e) {
  CMat m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace

CMat nullspace(const CMat& m, double tol) {
  Eigen::MatrixXcd e = to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      e, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? sv(0) : 0.0;
  double thresh = std::max(tol * scale, tol);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  int n = m.cols();
  Eigen::MatrixXcd v = svd.matrixV();
  CMat basis(n, n - r);
  for (int k = r; k < n; ++k)
    for (int i = 0; i < n; ++i) basis(i, k - r) = v(i, k);
  return basis;
}

int rank(const CMat& m, double tol) {
  return m.cols() - nullspace(m, tol).cols();
}

CMat solve(const CMat& a, const CMat& b, double tol) {
  Eigen::MatrixXcd ea = to_eigen(a), eb = to_eigen(b);
  Eigen::MatrixXcd x = ea.completeOrthogonalDecomposition().solve(eb);
  double resid = (ea * x - eb).norm();
  double scale = std::max(1.0, eb.norm());
  if (resid > tol * scale)
    throw Error(ErrorKind::Structural, "inconsistent linear system (residual " +
                                           format_double(resid) + ")");
  return from_eigen(x);
}

CMat inverse(const CMat& m) {
  assert(m.rows() == m.cols());
  return from_eigen(to_eigen(m).inverse());
}

std::vector<Rational> flatten(const RMat& m) {
  return m.data();
}

bool RSpan::add(const std::vector<Rational>& v) {
  assert(static_cast<int>(v.size()) == dim_);
  std::vector<Rational> w = v;
  std::vector<Rational> combo(raw_.size() + 1, Rational(0));
  combo.back() = Rational(1);
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Rational& f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    Rational ff = f;
    for (int j = 0; j < dim_; ++j) w[j] -= ff * basis_[i][j];
    for (size_t k = 0; k < combo_[i].size(); ++k) combo[k] -= ff * combo_[i][k];
  }
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (sgn(w[j]) != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Rational inv = 1 / w[piv];
  for (int j = 0; j < dim_; ++j) w[j] *= inv;
  for (Rational& c : combo) c *= inv;
  raw_.push_back(v);
  // Re-pad earlier combos to the new raw size.
  for (auto& c : combo_) c.resize(raw_.size(), Rational(0));
  combo.resize(raw_.size(), Rational(0));
  basis_.push_back(std::move(w));
  combo_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return true;
}

bool RSpan::coordinates(const std::vector<Rational>& v,
                        std::vector<Rational>& coeffs) const {
  assert(static_cast<int>(v.size()) == dim_);
  std::vector<Rational> w = v;
  std::vector<Rational> c(raw_.size(), Rational(0));
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (int j = 0; j < dim_; ++j) w[j] -= f * basis_[i][j];
    for (size_t k = 0; k < combo_[i].size(); ++k) c[k] += f * combo_[i][k];
  }
  for (int j = 0; j < dim_; ++j)
    if (sgn(w[j]) != 0) return false;
  coeffs = std::move(c);
  return true;
}

bool RSpan::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> c;
  return coordinates(v, c);
}

}  // namespace cesaro
