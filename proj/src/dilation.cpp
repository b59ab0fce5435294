#include "cesaro/dilation.hpp"

#include <cmath>

#include <mpfr.h>

namespace cesaro {

namespace {

constexpr int kEvalPrecision = 1280;  // bits

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

CMat jordan_block(Complex a, int nu) {
  CMat j(nu, nu);
  for (int i = 0; i < nu; ++i) {
    j(i, i) = a;
    if (i + 1 < nu) j(i, i + 1) = Complex(1);
  }
  return j;
}

/// Closed-form inverse of the Jordan block: (J^-1)_{ij} =
/// (-1)^{j-i} a^{-(j-i+1)} for j >= i.
CMat jordan_block_inverse(Complex a, int nu) {
  if (a == Complex(0))
    throw Error(ErrorKind::Admissibility,
                "dilation system needs a nonzero eigenvalue");
  CMat inv(nu, nu);
  Complex ainv = Complex(1) / a;
  for (int i = 0; i < nu; ++i) {
    Complex v = ainv;
    for (int j = i; j < nu; ++j) {
      inv(i, j) = v;
      v = -v * ainv;
    }
  }
  return inv;
}

}  // namespace

DilationSystem make_dilation_system(const std::vector<CMat>& radix_matrices,
                                    const JordanChain& chain) {
  DilationSystem sys;
  sys.radix = static_cast<int>(radix_matrices.size());
  if (sys.radix < 2)
    throw Error(ErrorKind::Structural, "need at least two radix matrices");
  sys.A = radix_matrices;
  sys.eigenvalue = chain.eigenvalue;
  const int d = radix_matrices[0].rows();
  const int nu = chain.height();
  sys.V = CMat(d, nu);
  for (int j = 0; j < nu; ++j) sys.V.set_col(j, chain.vectors[j]);
  sys.Jinv = jordan_block_inverse(sys.eigenvalue, nu);
  sys.partial.resize(sys.radix);
  CMat acc(d, d);
  for (int r = 0; r < sys.radix; ++r) {
    sys.partial[r] = acc * sys.V;
    acc = acc + sys.A[r];
  }
  sys.a_norm.resize(sys.radix);
  for (int r = 0; r < sys.radix; ++r)
    sys.a_norm[r] = induced_norm(sys.A[r], NormKind::Inf);
  // Crude sup estimate for F from a coarse exact grid, with headroom.  Only
  // used to stop the adaptive evaluator; accuracy is validated downstream.
  int coarse = 1;
  while (ipow(sys.radix, coarse + 1) <= 256) ++coarse;
  double sup = sys.V.max_abs();
  int64_t nodes = ipow(sys.radix, coarse);
  for (int64_t k = 1; k < nodes; ++k) {
    Rational x(static_cast<long>(k));
    x /= Rational(static_cast<long>(nodes));
    sup = std::max(sup, eval_exact_badic(sys, x).max_abs());
  }
  sys.f_sup = 2.0 * std::max(1.0, sup);
  return sys;
}

DilationSystem make_dilation_system(const CRep& rep, const JordanChain& chain) {
  return make_dilation_system(rep.A, chain);
}

DilationSystem make_dilation_system(const RRep& rep, const JordanChain& chain) {
  std::vector<CMat> a;
  for (const RMat& m : rep.A) a.push_back(to_complex(m));
  return make_dilation_system(a, chain);
}

CMat eval_exact_badic(const DilationSystem& sys, const Rational& x) {
  if (x < 0 || x > 1)
    throw Error(ErrorKind::Structural, "evaluation point must lie in [0, 1]");
  if (x == 1) return sys.V;
  // Extract the finite digit word.
  Rational rest = x;
  std::vector<int> digits;
  while (sgn(rest) != 0) {
    if (digits.size() > 256)
      throw Error(ErrorKind::Structural,
                  "point is not B-adic (digit expansion does not terminate)");
    rest *= sys.radix;
    mpz_class d;
    mpz_fdiv_q(d.get_mpz_t(), rest.get_num().get_mpz_t(),
               rest.get_den().get_mpz_t());
    digits.push_back(static_cast<int>(d.get_si()));
    rest -= Rational(d);
  }
  // Horner over the digits, least significant first:
  //   G  <-  (partial[digit] + A_digit G) J^{-1},  starting from F(0) = 0.
  CMat g(sys.dim(), sys.nu());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    g = (sys.partial[*it] + sys.A[*it] * g) * sys.Jinv;
  return g;
}

namespace {

void require_admissible(const DilationSystem& sys, double jsr_upper,
                        bool override_admissibility) {
  double rho = std::abs(sys.eigenvalue);
  if (rho <= jsr_upper + 1e-12 && !override_admissibility)
    throw Error(ErrorKind::Admissibility,
                "no continuous solution is guaranteed: |eigenvalue| = " +
                    format_double(rho) +
                    " does not exceed the joint spectral radius bound " +
                    format_double(jsr_upper) +
                    "; pass an override to force the computation");
}

}  // namespace

SolutionGrid solve_jordan_system(const DilationSystem& sys, double jsr_upper,
                                 int depth, bool override_admissibility) {
  require_admissible(sys, jsr_upper, override_admissibility);
  if (depth < 1 || ipow(sys.radix, depth) > (int64_t(1) << 22))
    throw Error(ErrorKind::Budget, "grid depth out of range");
  SolutionGrid grid;
  grid.radix = sys.radix;
  grid.depth = depth;
  // Self-similar fill: the tail of a depth-j node is a depth-(j-1) node, so
  // each level is one pass over the previous one (exact unrolling overall).
  std::vector<CMat> prev = {CMat(sys.dim(), sys.nu())};  // depth 0: F(0)
  for (int j = 1; j <= depth; ++j) {
    int64_t n = ipow(sys.radix, j);
    int64_t step = n / sys.radix;
    std::vector<CMat> cur(n);
    for (int64_t k = 0; k < n; ++k) {
      int digit = static_cast<int>(k / step);
      cur[k] = (sys.partial[digit] + sys.A[digit] * prev[k % step]) * sys.Jinv;
    }
    prev = std::move(cur);
  }
  prev.push_back(sys.V);  // F(1) = V
  grid.values = std::move(prev);
  return grid;
}

CascadeResult cascade_grid(const DilationSystem& sys, double jsr_upper,
                           int depth, int iterations,
                           bool override_admissibility) {
  require_admissible(sys, jsr_upper, override_admissibility);
  if (depth < 1 || ipow(sys.radix, depth) > (int64_t(1) << 22))
    throw Error(ErrorKind::Budget, "grid depth out of range");
  int64_t n = ipow(sys.radix, depth);
  CascadeResult out;
  out.grid.radix = sys.radix;
  out.grid.depth = depth;
  // G_0(x) = x V.
  std::vector<CMat> cur(n + 1);
  for (int64_t k = 0; k <= n; ++k)
    cur[k] = sys.V * Complex(static_cast<double>(k) / n, 0);
  for (int it = 0; it < iterations; ++it) {
    std::vector<CMat> next(n + 1);
    for (int64_t k = 0; k < n; ++k) {
      int64_t kb = k * sys.radix;
      int digit = static_cast<int>(kb / n);
      next[k] = (sys.partial[digit] + sys.A[digit] * cur[kb % n]) * sys.Jinv;
    }
    next[n] = sys.V;
    double diff = 0.0;
    for (int64_t k = 0; k <= n; ++k)
      diff = std::max(diff, (next[k] - cur[k]).max_abs());
    out.sup_diffs.push_back(diff);
    cur = std::move(next);
  }
  out.grid.values = std::move(cur);
  return out;
}

CMat eval_grid(const SolutionGrid& grid, double x) {
  if (x < 0.0 || x > 1.0)
    throw Error(ErrorKind::Structural, "evaluation point must lie in [0, 1]");
  int64_t n = grid.nodes() - 1;
  double pos = x * static_cast<double>(n);
  int64_t k = static_cast<int64_t>(std::floor(pos));
  if (k >= n) return grid.values.back();
  double frac = pos - static_cast<double>(k);
  if (frac == 0.0) return grid.values[k];
  return grid.values[k] * Complex(1.0 - frac, 0) +
         grid.values[k + 1] * Complex(frac, 0);
}

// --- high-precision evaluation points ------------------------------------

struct EvalPoint::Impl {
  mpfr_t x;
  Impl() { mpfr_init2(x, kEvalPrecision); }
  ~Impl() { mpfr_clear(x); }
};

EvalPoint::EvalPoint() : impl_(new Impl) {}
EvalPoint::~EvalPoint() = default;
EvalPoint::EvalPoint(const EvalPoint& o) : impl_(new Impl) {
  mpfr_set(impl_->x, o.impl_->x, MPFR_RNDN);
}
EvalPoint& EvalPoint::operator=(const EvalPoint& o) {
  if (this != &o) mpfr_set(impl_->x, o.impl_->x, MPFR_RNDN);
  return *this;
}

EvalPoint EvalPoint::from_rational(const Rational& x) {
  EvalPoint p;
  mpfr_set_q(p.impl_->x, x.get_mpq_t(), MPFR_RNDN);
  return p;
}

EvalPoint EvalPoint::from_double(double x) {
  EvalPoint p;
  mpfr_set_d(p.impl_->x, x, MPFR_RNDN);
  return p;
}

EvalPoint EvalPoint::from_power(int radix, double exponent) {
  if (exponent > 0)
    throw Error(ErrorKind::Structural, "exponent must be nonpositive");
  EvalPoint p;
  mpfr_t e;
  mpfr_init2(e, kEvalPrecision);
  mpfr_set_d(e, exponent, MPFR_RNDN);
  mpfr_ui_pow(p.impl_->x, static_cast<unsigned long>(radix), e, MPFR_RNDN);
  mpfr_clear(e);
  return p;
}

int EvalPoint::pop_digit(int radix) {
  mpfr_mul_ui(impl_->x, impl_->x, static_cast<unsigned long>(radix),
              MPFR_RNDN);
  long d = mpfr_get_si(impl_->x, MPFR_RNDD);
  if (d < 0) d = 0;
  if (d >= radix) d = radix - 1;  // x == 1 edge: clamp
  mpfr_sub_si(impl_->x, impl_->x, d, MPFR_RNDN);
  return static_cast<int>(d);
}

bool EvalPoint::is_zero() const { return mpfr_zero_p(impl_->x) != 0; }

double EvalPoint::to_double() const {
  return mpfr_get_d(impl_->x, MPFR_RNDN);
}

CMat eval_adaptive(const DilationSystem& sys, const EvalPoint& x, double tol,
                   int max_digits, AdaptiveEvalStats* stats) {
  // Cap the digit count so extracted digits stay meaningful.
  int precision_cap = static_cast<int>(
      (kEvalPrecision - 96) / std::log2(static_cast<double>(sys.radix)));
  max_digits = std::min(max_digits, precision_cap);

  EvalPoint work = x;
  std::vector<int> digits;
  // Remainder after m digits: A_{x_1..x_m} F(tail) J^{-m}; track the actual
  // prefix product so the bound reflects cancellations inside the product.
  CMat prefix = CMat::identity(sys.dim());
  CMat jinv_pow = CMat::identity(sys.nu());
  double bound = sys.f_sup;
  while (!work.is_zero() && static_cast<int>(digits.size()) < max_digits) {
    int d = work.pop_digit(sys.radix);
    digits.push_back(d);
    prefix = prefix * sys.A[d];
    jinv_pow = jinv_pow * sys.Jinv;
    bound = induced_norm(prefix, NormKind::Inf) *
            induced_norm(jinv_pow, NormKind::Inf) * sys.f_sup;
    if (bound <= tol) break;
  }
  if (stats) {
    stats->digits_used = static_cast<int>(digits.size());
    stats->error_bound = work.is_zero() ? 0.0 : bound;
  }
  CMat g(sys.dim(), sys.nu());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    g = (sys.partial[*it] + sys.A[*it] * g) * sys.Jinv;
  return g;
}

double holder_exponent(double rho, double lambda, int radix) {
  if (!(rho > 0) || !(lambda > 0))
    throw Error(ErrorKind::Structural, "rates must be positive");
  if (rho <= lambda)
    throw Error(ErrorKind::Admissibility,
                "Hoelder exponent requires rho > lambda");
  double a = std::log(rho / lambda) / std::log(static_cast<double>(radix));
  return std::min(1.0, a);
}

double residual(const DilationSystem& sys, const SolutionGrid& grid) {
  int64_t n = grid.nodes() - 1;
  CMat j = jordan_block(sys.eigenvalue, sys.nu());
  double worst = 0.0;
  for (int64_t k = 1; k < n; ++k) {
    int64_t kb = k * sys.radix;
    int digit = static_cast<int>(kb / n);
    const CMat& tail = grid.values[kb % n];  // (Bx - x_1) is again a node
    CMat lhs = grid.values[k] * j;
    CMat rhs = sys.partial[digit] + sys.A[digit] * tail;
    worst = std::max(worst, (lhs - rhs).max_abs());
  }
  return worst;
}

}  // namespace cesaro
