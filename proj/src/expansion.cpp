#include "cesaro/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

namespace cesaro {

double ErrorClass::envelope_words(int64_t K) const {
  if (kind == Kind::ExactZero) return 0.0;
  double v = std::pow(rate, static_cast<double>(K));
  if (kind == Kind::PowerLog)
    v *= std::pow(std::max(1.0, static_cast<double>(K)), log_power);
  return v;
}

double ErrorClass::envelope_integers(int64_t N, int radix) const {
  if (kind == Kind::ExactZero) return 0.0;
  double logn = std::log(std::max<double>(2.0, static_cast<double>(N))) /
                std::log(static_cast<double>(radix));
  double v = std::pow(static_cast<double>(N),
                      std::log(rate) / std::log(static_cast<double>(radix)));
  if (kind == Kind::PowerLog) v *= std::pow(logn, log_power);
  return v;
}

namespace {

int auto_depth(int radix, int requested) {
  if (requested > 0) return requested;
  int depth = 1;
  int64_t cells = radix;
  while (cells * radix <= 4096) {
    cells *= radix;
    ++depth;
  }
  return depth;
}

bool c_is_zero(const RMat& c) {
  for (int i = 0; i < c.rows(); ++i)
    if (sgn(c(i, 0)) != 0) return false;
  return true;
}
bool c_is_zero(const CMat& c) { return c.max_abs() == 0.0; }

template <class RepT>
WordExpansion lrtoae1_impl(const RepT& rep, const ExpansionOptions& opts) {
  validate(rep);
  constexpr bool rational = std::is_same_v<RepT, RRep>;

  WordExpansion out;
  out.radix = rep.radix;
  out.dim = rep.dim;
  out.jsr = jsr_estimate(rep, opts.jsr);

  if (c_is_zero(rep.C)) {
    out.err.kind = ErrorClass::Kind::ExactZero;
    out.lambda = out.jsr.upper;
    return out;
  }

  auto q = rep.Q();
  EigenStructure es = eigen_structure(q, rep.eigen_hints, opts.tol);
  std::vector<JordanChain> chains = jordan_basis(q, es, opts.tol);
  CDecomposition dec = decompose_C(chains, rep.C, opts.tol);

  // Truncation rate lambda: the joint spectral radius when attained,
  // otherwise halfway between the upper bound and the smallest eigenvalue
  // modulus above it.
  const double upper = out.jsr.upper;
  if (out.jsr.attained == Attained::Yes) {
    out.lambda = upper;
    out.lambda_exact = out.jsr.exact;
    if (out.lambda_exact) out.lambda_rational = out.jsr.exact_value;
  } else {
    double next = std::numeric_limits<double>::infinity();
    for (const auto& ch : chains) {
      double rho = std::abs(ch.eigenvalue);
      if (rho > upper * (1 + opts.tol) && rho < next) next = rho;
    }
    out.lambda = std::isfinite(next) ? 0.5 * (upper + next) : upper;
  }

  // Retained (chain, level) pairs: eigenvalue modulus above lambda and a
  // nonzero coefficient of C.
  double cscale = 1.0;
  if constexpr (rational)
    cscale = std::max(1.0, to_complex(rep.C).max_abs());
  else
    cscale = std::max(1.0, rep.C.max_abs());

  std::vector<int> system_of_chain(chains.size(), -1);
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    const JordanChain& ch = chains[ci];
    bool kept;
    if (ch.exact && out.lambda_exact)
      kept = abs_exact(ch.eigen_rational) > out.lambda_rational;
    else
      kept = std::abs(ch.eigenvalue) > out.lambda * (1 + 1e-12);
    if (!kept) continue;
    for (int j = 0; j < ch.height(); ++j) {
      bool nonzero = dec.exact ? sgn(dec.gamma_exact[ci][j]) != 0
                               : std::abs(dec.gamma[ci][j]) > opts.tol * cscale;
      if (!nonzero) continue;
      if (system_of_chain[ci] < 0) {
        DilationSystem sys;
        if constexpr (rational)
          sys = make_dilation_system(rep, ch);
        else
          sys = make_dilation_system(rep.A, ch);
        out.systems.push_back(std::move(sys));
        int depth = auto_depth(rep.radix, opts.grid_depth);
        out.grids.push_back(
            solve_jordan_system(out.systems.back(), upper, depth));
        system_of_chain[ci] = static_cast<int>(out.systems.size()) - 1;
      }
      ExpansionTerm term;
      term.chain = system_of_chain[ci];
      term.gamma = dec.gamma[ci][j];
      term.eigenvalue = ch.eigenvalue;
      term.height = j + 1;
      out.terms.push_back(term);
    }
  }

  // Error class.
  if (out.jsr.attained == Attained::Yes) {
    out.err.kind = ErrorClass::Kind::PowerLog;
    out.err.rate = upper;
    int m = 0;
    double scale = std::max(1.0, upper);
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      const JordanChain& ch = chains[ci];
      bool at_star;
      if (ch.exact && out.jsr.exact)
        at_star = abs_exact(ch.eigen_rational) == out.jsr.exact_value;
      else
        at_star = std::abs(std::abs(ch.eigenvalue) - upper) <= opts.tol * scale;
      if (!at_star) continue;
      for (int j = 0; j < ch.height(); ++j) {
        bool nonzero = dec.exact
                           ? sgn(dec.gamma_exact[ci][j]) != 0
                           : std::abs(dec.gamma[ci][j]) > opts.tol * cscale;
        if (nonzero) m = std::max(m, j + 1);
      }
    }
    out.err.log_power = m;
    if (m == 0) out.err.kind = ErrorClass::Kind::Power;
  } else {
    out.err.kind = ErrorClass::Kind::Power;
    out.err.rate = out.lambda;
  }
  return out;
}

/// Coefficient sum_{k=0..K} binom(k, ell) a^{k-ell}, optionally without its
/// constant block (the part that stays O(1) as K grows).
Complex first_part_coeff(Complex a, int64_t K, int ell, bool keep_constant,
                         double tol) {
  Complex s = geometric_binomial_sum(a, K, ell, tol);
  if (!keep_constant && std::abs(a - Complex(1)) > tol) {
    Complex am1 = a - Complex(1);
    Complex tail = Complex(1) / std::pow(am1, Complex(ell + 1, 0));
    s -= (ell % 2 == 0) ? -tail : tail;
  }
  return s;
}

}  // namespace

WordExpansion lrtoae1(const RRep& rep, const ExpansionOptions& opts) {
  return lrtoae1_impl(rep, opts);
}
WordExpansion lrtoae1(const CRep& rep, const ExpansionOptions& opts) {
  return lrtoae1_impl(rep, opts);
}

CMat eval_expansion_words(const WordExpansion& exp, int64_t K, double x) {
  CMat out(exp.dim, 1);
  for (const ExpansionTerm& term : exp.terms) {
    const SolutionGrid& grid = exp.grids[term.chain];
    CMat f = eval_grid(grid, x);  // d x (full chain height)
    const int nu = term.height;
    Complex a = term.eigenvalue;
    for (int i = 0; i < nu; ++i) {
      double b = binom(K, nu - 1 - i);
      if (b == 0.0) continue;
      Complex coeff = term.gamma * Complex(b, 0) *
                      std::pow(a, Complex(static_cast<double>(K - nu + 1 + i), 0));
      out = out + f.col(i) * coeff;
    }
  }
  return out;
}

ErrorClass error_class(const WordExpansion& exp) { return exp.err; }
ErrorClass error_class(const IntegerExpansion& exp) { return exp.err; }

namespace {

template <class RepT>
IntegerExpansion lrtoae2_impl(const RepT& rep, const ExpansionOptions& opts) {
  IntegerExpansion out;
  out.base = lrtoae1_impl(rep, opts);
  if constexpr (std::is_same_v<RepT, RRep>)
    out.A0 = to_complex(rep.A[0]);
  else
    out.A0 = rep.A[0];
  // lambda vs 1, with the exact fast path and a flagged near-tie.
  if (out.base.lambda_exact) {
    out.keep_constant = out.base.lambda_rational < 1;
  } else if (std::abs(out.base.lambda - 1.0) <= kDefaultTol) {
    out.keep_constant = false;  // follow the lambda >= 1 branch
    out.err.rate_near_one = true;
  } else {
    out.keep_constant = out.base.lambda < 1.0;
  }
  out.err.kind = out.base.err.kind;
  out.err.rate = out.base.err.rate;
  out.err.log_power = out.base.err.log_power;
  return out;
}

/// Shared evaluation of the regular part at (K, x), where fx[i] must hold
/// the dilation solutions F evaluated at x for each system.
CMat eval_regular_at(const IntegerExpansion& exp, int64_t K,
                     const std::vector<CMat>& fx) {
  const WordExpansion& base = exp.base;
  CMat out(base.dim, 1);
  CMat id = CMat::identity(base.dim);
  CMat imA0 = id - exp.A0;
  for (const ExpansionTerm& term : base.terms) {
    const DilationSystem& sys = base.systems[term.chain];
    const CMat& f = fx[term.chain];
    const int nu = term.height;
    Complex a = term.eigenvalue;

    // First block: (I - A_0) sum_{k=0..K} Q^k V^(nu-1), expanded over the
    // subchain with the elementary summation formula; the constant part is
    // retained only when lambda < 1.
    CMat first(base.dim, 1);
    for (int i = 0; i < nu; ++i) {
      Complex coeff =
          first_part_coeff(a, K, nu - 1 - i, exp.keep_constant, kDefaultTol);
      first = first + sys.V.col(i) * coeff;
    }
    first = imA0 * first;

    // Second block: S_{K+1}(x) contribution.
    CMat second(base.dim, 1);
    {
      double b = binom(K, nu - 1);
      if (b != 0.0)
        second = second +
                 f.col(0) * (Complex(b, 0) *
                             std::pow(a, Complex(static_cast<double>(K - nu + 2), 0)));
      for (int ell = 0; ell <= nu - 2; ++ell) {
        double bl = binom(K, ell);
        if (bl == 0.0) continue;
        Complex scale =
            Complex(bl, 0) * std::pow(a, Complex(static_cast<double>(K - ell), 0));
        CMat inner = f.col(nu - ell - 1) * a + f.col(nu - ell - 2);
        second = second + inner * scale;
      }
    }
    out = out + (first + second) * term.gamma;
  }
  return out;
}

}  // namespace

IntegerExpansion lrtoae2(const RRep& rep, const ExpansionOptions& opts) {
  return lrtoae2_impl(rep, opts);
}
IntegerExpansion lrtoae2(const CRep& rep, const ExpansionOptions& opts) {
  return lrtoae2_impl(rep, opts);
}

CMat eval_expansion_integers(const IntegerExpansion& exp, int64_t N) {
  if (N < 1)
    throw Error(ErrorKind::Structural, "integer expansion needs N >= 1");
  const WordExpansion& base = exp.base;
  DigitWord w = digit_word(N, base.radix);
  int64_t K = static_cast<int64_t>(w.size()) - 1;
  // x = N / B^{K+1} is exactly B-adic.
  Rational x(static_cast<long>(N));
  Rational denom(1);
  for (int64_t i = 0; i <= K; ++i) denom *= base.radix;
  x /= denom;
  std::vector<CMat> fx;
  fx.reserve(base.systems.size());
  for (const DilationSystem& sys : base.systems)
    fx.push_back(eval_exact_badic(sys, x));
  return eval_regular_at(exp, K, fx);
}

CMat eval_regular_part(const IntegerExpansion& exp, double t, double tol) {
  if (t < 0)
    throw Error(ErrorKind::Structural, "t = log_B N must be nonnegative");
  const WordExpansion& base = exp.base;
  int64_t K = static_cast<int64_t>(std::floor(t));
  double frac = t - static_cast<double>(K);
  EvalPoint x = EvalPoint::from_power(base.radix, frac - 1.0);
  std::vector<CMat> fx;
  fx.reserve(base.systems.size());
  for (const DilationSystem& sys : base.systems)
    fx.push_back(eval_adaptive(sys, x, tol));
  return eval_regular_at(exp, K, fx);
}

PeriodicProfile periodic_profile(const IntegerExpansion& exp, double rho,
                                 const std::vector<double>& t_samples,
                                 double tol) {
  PeriodicProfile out;
  out.rho = rho;
  // Restrict to the modulus class.
  IntegerExpansion restricted = exp;
  restricted.base.terms.clear();
  bool heights_ok = true;
  std::vector<Complex> omegas;
  for (const ExpansionTerm& term : exp.base.terms) {
    double r = std::abs(term.eigenvalue);
    if (std::abs(r - rho) > tol * std::max(1.0, rho)) continue;
    restricted.base.terms.push_back(term);
    if (term.height > 1) heights_ok = false;
    omegas.push_back(term.eigenvalue / r);
  }
  if (restricted.base.terms.empty())
    throw Error(ErrorKind::Structural,
                "no expansion term has the requested modulus");
  // Root-of-unity detection.
  int period = 0;
  for (int q2 = 1; q2 <= 64 && period == 0; ++q2) {
    bool all = true;
    for (const Complex& w : omegas)
      if (std::abs(std::pow(w, q2) - Complex(1)) > 1e-9) all = false;
    if (all) period = q2;
  }
  out.periodic = period > 0 && heights_ok;
  out.period = period;
  for (double t : t_samples) {
    CMat v = eval_regular_part(restricted, t);
    v = v * Complex(std::pow(rho, -t), 0);
    out.t.push_back(t);
    out.values.push_back(std::move(v));
  }
  return out;
}

}  // namespace cesaro
