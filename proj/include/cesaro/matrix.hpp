#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <vector>

#include "cesaro/scalar.hpp"

namespace cesaro {

/// Small dense matrix over an exact (Rational) or inexact (Complex) field.
/// Row-major storage; dimensions are tiny (d <= a few dozen) throughout the
/// library, so no attempt is made at blocking or expression templates.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Mat(int rows, int cols, std::initializer_list<T> vals)
      : rows_(rows), cols_(cols), a_(vals) {
    assert(static_cast<int>(a_.size()) == rows * cols);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Column vector helper.
  static Mat col_vec(std::initializer_list<T> vals) {
    Mat m(static_cast<int>(vals.size()), 1);
    int i = 0;
    for (const T& v : vals) m(i++, 0) = v;
    return m;
  }
  /// Row vector helper.
  static Mat row_vec(std::initializer_list<T> vals) {
    Mat m(1, static_cast<int>(vals.size()));
    int j = 0;
    for (const T& v : vals) m(0, j++) = v;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator-() const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& aik = (*this)(i, k);
        if (is_zero_entry(aik)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  Mat operator*(const T& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }
  friend Mat operator*(const T& s, const Mat& m) { return m * s; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat col(int j) const {
    Mat r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
    return r;
  }
  Mat row(int i) const {
    Mat r(1, cols_);
    for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }
  void set_col(int j, const Mat& v) {
    assert(v.rows_ == rows_ && v.cols_ == 1);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
  }

  /// Horizontal concatenation.
  static Mat hcat(const Mat& a, const Mat& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    assert(a.rows_ == b.rows_);
    Mat r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  /// Max absolute value of the entries (double, good enough for scaling).
  double max_abs() const {
    double m = 0.0;
    for (const T& v : a_) m = std::max(m, abs_value(v));
    return m;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  static bool is_zero_entry(const Rational& v) { return sgn(v) == 0; }
  static bool is_zero_entry(const Complex& v) {
    return v.real() == 0.0 && v.imag() == 0.0;
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using RMat = Mat<Rational>;
using CMat = Mat<Complex>;

/// Lie bracket [X, Y] = XY - YX.
template <class T>
Mat<T> lie_bracket(const Mat<T>& x, const Mat<T>& y) {
  return x * y - y * x;
}

/// Entrywise conversion to the complex field.
CMat to_complex(const RMat& m);
inline const CMat& to_complex(const CMat& m) { return m; }

/// Real part / imaginary part extraction (as doubles).
double max_imag_abs(const CMat& m);

/// Induced matrix norms.  `one` and `inf` are exact over rationals; the
/// two-norm always goes through the numeric engine (see numerics.hpp).
enum class NormKind { One, Inf, Two };

Rational induced_norm_exact(const RMat& m, NormKind kind);  // One or Inf only
double induced_norm(const CMat& m, NormKind kind);
double induced_norm(const RMat& m, NormKind kind);

/// Frobenius norm of the difference, used for residual reporting.
double frobenius(const CMat& m);

// --- exact rational elimination ------------------------------------------

/// Reduced row echelon form in place; returns pivot column indices in
/// ascending order (deterministic: first nonzero entry scanning columns
/// left to right, rows top to bottom).
std::vector<int> rref(RMat& m);

int rank(RMat m);

/// Right nullspace basis, one column per free variable, in column order.
RMat nullspace(const RMat& m);

/// Solves a X = b for X (exact); returns false if inconsistent.
bool solve(const RMat& a, const RMat& b, RMat& x);

/// Inverse of a square rational matrix; throws Error(Structural) if singular.
RMat inverse(const RMat& m);

// --- complex (tolerance-based) counterparts ------------------------------

/// Right nullspace with tolerance-based rank decisions (via SVD).
CMat nullspace(const CMat& m, double tol = kDefaultTol);

int rank(const CMat& m, double tol = kDefaultTol);

/// Least-squares / exact solve a X = b; throws Error(Structural) when the
/// residual exceeds `tol` times the scale of b.
CMat solve(const CMat& a, const CMat& b, double tol = kDefaultTol);

CMat inverse(const CMat& m);

/// Incremental exact span tracker over the rationals: vectors are flattened
/// matrices.  Used by closures (Lie algebra, forward/backward closure,
/// representation inference).
class RSpan {
 public:
  explicit RSpan(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(basis_.size()); }

  /// Returns true (and stores v) when v enlarges the span.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;

  /// Expresses v in the *original* inserted vectors; returns false if v is
  /// outside the span.  coeffs gets size() entries.
  bool coordinates(const std::vector<Rational>& v,
                   std::vector<Rational>& coeffs) const;

  const std::vector<std::vector<Rational>>& raw_basis() const { return raw_; }

 private:
  int dim_;
  // Row-reduced basis plus, for each reduced row, its expression in the raw
  // inserted vectors (to recover coordinates).
  std::vector<std::vector<Rational>> basis_;   // reduced, pivot-normalized
  std::vector<std::vector<Rational>> combo_;   // basis_[i] = sum combo_[i][k] raw_[k]
  std::vector<int> pivots_;
  std::vector<std::vector<Rational>> raw_;
};

std::vector<Rational> flatten(const RMat& m);

}  // namespace cesaro
