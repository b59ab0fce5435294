#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

/// Radix digits of an index, most-significant digit first.  The canonical
/// word of 0 is empty.
using DigitWord = std::vector<int>;

DigitWord digit_word(int64_t n, int radix);
int64_t word_value(const DigitWord& w, int radix);

/// A linear representation of a radix-rational sequence:
///   u(n) = L * A_{w_1} * ... * A_{w_K} * C
/// where w_1 ... w_K is the canonical radix-`radix` word of n (most
/// significant digit leftmost); u(0) = L * C.
template <class T>
struct LinearRep {
  int radix = 2;                   ///< B >= 2
  int dim = 0;                     ///< state dimension d
  Mat<T> L;                        ///< 1 x d row functional
  std::vector<Mat<T>> A;           ///< radix matrices, each d x d
  Mat<T> C;                        ///< d x 1 initial column
  std::string name;
  std::vector<Complex> eigen_hints;  ///< optional known eigenvalues of Q

  Mat<T> Q() const {
    Mat<T> q(dim, dim);
    for (const auto& a : A) q = q + a;
    return q;
  }
};

using RRep = LinearRep<Rational>;
using CRep = LinearRep<Complex>;

/// Either scalar domain, for I/O-level dispatch.
using AnyRep = std::variant<RRep, CRep>;

/// Throws Error(Structural) when dimensions or the radix are malformed.
template <class T>
void validate(const LinearRep<T>& rep) {
  if (rep.radix < 2)
    throw Error(ErrorKind::Structural, "radix must be at least 2");
  if (rep.dim < 1)
    throw Error(ErrorKind::Structural, "dimension must be positive");
  if (static_cast<int>(rep.A.size()) != rep.radix)
    throw Error(ErrorKind::Structural, "expected one matrix per digit");
  if (rep.L.rows() != 1 || rep.L.cols() != rep.dim)
    throw Error(ErrorKind::Structural, "L must be 1 x dim");
  if (rep.C.rows() != rep.dim || rep.C.cols() != 1)
    throw Error(ErrorKind::Structural, "C must be dim x 1");
  for (const auto& a : rep.A)
    if (a.rows() != rep.dim || a.cols() != rep.dim)
      throw Error(ErrorKind::Structural, "every A_r must be dim x dim");
}

/// Column vector A_w * C for an explicit word.
template <class T>
Mat<T> eval_word_vector(const LinearRep<T>& rep, const DigitWord& w) {
  Mat<T> v = rep.C;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0 || *it >= rep.radix)
      throw Error(ErrorKind::Structural, "digit out of range");
    v = rep.A[*it] * v;
  }
  return v;
}

/// Scalar u(n) = L A_{w(n)} C over the canonical word of n.
template <class T>
T eval_term(const LinearRep<T>& rep, int64_t n) {
  Mat<T> v = eval_word_vector(rep, digit_word(n, rep.radix));
  T s(0);
  for (int j = 0; j < rep.dim; ++j) s += rep.L(0, j) * v(j, 0);
  return s;
}

/// Whether L A_0 == L (so values are insensitive to leading zeros).
bool is_insensitive(const RRep& rep);
bool is_insensitive(const CRep& rep, double tol = kDefaultTol);

enum class SumMethod { Naive, Digitwise };
enum class IntegerSumMethod { Brute, Decomposition };

/// Word-indexed running sum
///   S_K(x) = sum over |w| = K with (0.w)_B <= x of A_w C,
/// for exact rational x in [0, 1].
///
/// Naive enumerates the B^K words (budget B^K <= 2^20); Digitwise uses the
/// one-digit recursion S_{K+1}(x) = sum_{r<x_1} A_r Q^K C + A_{x_1} S_K(Bx - x_1).
template <class T>
Mat<T> running_sum_words(const LinearRep<T>& rep, int K, const Rational& x,
                         SumMethod method = SumMethod::Digitwise);

/// Integer-indexed running sum  Sigma_N = sum_{n=0}^{N} A_{w(n)} C over
/// canonical words (n = 0 contributes C).
///
/// Brute accumulates term by term (exact when the rep is rational);
/// Decomposition uses
///   Sigma_N = (I - A_0) sum_{k=0}^{K} Q^k C + S_{K+1}(N / B^{K+1}),
/// where B^K <= N < B^{K+1}.
template <class T>
Mat<T> running_sum_integers(const LinearRep<T>& rep, int64_t N,
                            IntegerSumMethod method);

/// Scalar L * Sigma_N.
template <class T>
T running_sum_value(const LinearRep<T>& rep, int64_t N,
                    IntegerSumMethod method) {
  Mat<T> v = running_sum_integers(rep, N, method);
  T s(0);
  for (int j = 0; j < rep.dim; ++j) s += rep.L(0, j) * v(j, 0);
  return s;
}

/// Incremental exact accumulator for Sigma_N, amortizing the per-index word
/// products with a digit stack (binary-counter style).  Visit N = 0, 1, 2, ...
/// in order and read `total()` after each step.
template <class T>
class RunningSumAccumulator {
 public:
  explicit RunningSumAccumulator(const LinearRep<T>& rep)
      : rep_(&rep), total_(rep.C), n_(0) {}

  int64_t current_index() const { return n_; }
  const Mat<T>& total() const { return total_; }  ///< Sigma_{current_index}

  /// Advances to the next index and folds its term into the total.
  void advance();

 private:
  const LinearRep<T>* rep_;
  Mat<T> total_;
  int64_t n_;
  DigitWord digits_;
  std::vector<Mat<T>> prefix_;  // prefix_[j] = A_{w_1} ... A_{w_{j+1}}
};

/// Radix-B^T representation of the same sequence (requires insensitivity to
/// be value-preserving): A'_s = A_{w} over the T-digit base-B word of s.
template <class T>
LinearRep<T> radix_power(const LinearRep<T>& rep, int T_power);

/// Minimizes a rational representation by forward (column) closure followed
/// by backward (row) closure.  The reduced rep generates the same formal
/// series: L' A'_w C' = L A_w C for every word w.
RRep reduce(const RRep& rep);

struct InferOptions {
  int64_t check_horizon = 1024;  ///< oracle must be total on [0, horizon)
  int max_level = -1;            ///< deepest subsequence level; -1 = auto
};

/// Guesses a rational linear representation from term values, enumerating
/// candidate subsequences n -> u(B^k n + s) with k ascending and s ascending
/// within each k, keeping those that enlarge the span of truncated value
/// vectors.  The result is validated against the oracle on the whole
/// horizon.  Throws Error(Structural) if the sequence is not recognized
/// (dimension still growing at the level budget, or verification fails).
RRep infer_representation(int radix,
                          const std::function<Rational(int64_t)>& oracle,
                          const InferOptions& opts = {});

/// A constant-length substitution with output map.  Letters are indices
/// 0..m-1; sigma[x] lists the `radix` letters of the image of x; the fixed
/// point starts at letter `start` (sigma[start][0] must equal start).
struct Substitution {
  int radix = 2;
  std::vector<std::vector<int>> sigma;
  std::vector<Rational> output;
  int start = 0;
};

/// Linear representation of n -> output(fixed_point[n]).
RRep substitution_to_linrep(const Substitution& sub);

}  // namespace cesaro
