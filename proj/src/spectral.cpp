#include "cesaro/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cesaro {

std::vector<Rational> char_poly_rational(const RMat& m) {
  const int d = m.rows();
  if (d != m.cols())
    throw Error(ErrorKind::Structural, "characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier: M_1 = A, c_{d-1} = -tr M_1,
  // M_{k+1} = A (M_k + c_{d-k} I), c_{d-k-1} = -tr(M_{k+1}) / (k+1).
  std::vector<Rational> c(d + 1, Rational(0));
  c[d] = Rational(1);
  RMat mk = m;
  for (int k = 1; k <= d; ++k) {
    Rational tr(0);
    for (int i = 0; i < d; ++i) tr += mk(i, i);
    c[d - k] = -tr / Rational(k);
    if (k < d) {
      RMat shifted = mk;
      for (int i = 0; i < d; ++i) shifted(i, i) += c[d - k];
      mk = m * shifted;
    }
  }
  return c;
}

namespace {

/// Divisors of |z| (including 1 and |z|), capped to keep the root test
/// bounded; the characteristic polynomials here are tiny.
std::vector<mpz_class> divisors(const mpz_class& z) {
  mpz_class n = abs(z);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      out.push_back(n / i);
    }
  }
  return out;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// Deflates (x - r) exactly; c must vanish at r.
std::vector<Rational> deflate(const std::vector<Rational>& c,
                              const Rational& r) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<Rational> out(deg);
  Rational carry(0);
  for (int k = deg; k >= 1; --k) {
    carry = c[k] + carry * r;
    out[k - 1] = carry;
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(
    std::vector<Rational> coeffs) {
  // Strip leading zeros.
  while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) coeffs.pop_back();
  std::vector<std::pair<Rational, int>> roots;
  // Factor out x^m.
  int zero_mult = 0;
  while (coeffs.size() > 1 && sgn(coeffs.front()) == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (coeffs.size() <= 1) return roots;

  // Clear denominators to an integer polynomial.
  mpz_class lcm_den(1);
  for (const Rational& c : coeffs)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<mpz_class> ic(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    Rational scaled = coeffs[k] * Rational(lcm_den);
    ic[k] = scaled.get_num();
  }
  std::vector<mpz_class> ps = divisors(ic.front());
  std::vector<mpz_class> qs = divisors(ic.back());
  std::vector<Rational> candidates;
  for (const mpz_class& p : ps)
    for (const mpz_class& q : qs) {
      Rational r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Rational& r : candidates) {
    int mult = 0;
    while (coeffs.size() > 1 && sgn(eval_poly(coeffs, r)) == 0) {
      coeffs = deflate(coeffs, r);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct Cluster {
  Complex value;
  int count = 0;
};

/// Groups numeric eigenvalues within tol of each other (transitively) and
/// averages each group.
std::vector<Cluster> cluster_eigenvalues(std::vector<Complex> vals,
                                         double tol) {
  double scale = 1.0;
  for (const Complex& v : vals) scale = std::max(scale, std::abs(v));
  double eps = tol * scale * 100;  // rank-style slack for multiple roots
  std::vector<Cluster> out;
  std::vector<bool> used(vals.size(), false);
  for (size_t i = 0; i < vals.size(); ++i) {
    if (used[i]) continue;
    Complex sum = vals[i];
    int cnt = 1;
    used[i] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      Complex mean = sum / static_cast<double>(cnt);
      for (size_t j = 0; j < vals.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(vals[j] - mean) <= eps) {
          sum += vals[j];
          ++cnt;
          used[j] = true;
          grew = true;
        }
      }
    }
    out.push_back({sum / static_cast<double>(cnt), cnt});
  }
  return out;
}

void apply_hints(EigenStructure& es, const std::vector<Complex>& hints,
                 double tol) {
  double scale = 1.0;
  for (const Complex& v : es.values) scale = std::max(scale, std::abs(v));
  for (size_t i = 0; i < es.values.size(); ++i) {
    if (es.exact[i]) continue;
    for (const Complex& h : hints)
      if (std::abs(es.values[i] - h) <= 1e-6 * scale) {
        es.values[i] = h;
        break;
      }
  }
  (void)tol;
}

}  // namespace

EigenStructure eigen_structure(const RMat& q, const std::vector<Complex>& hints,
                               double tol) {
  EigenStructure es;
  es.dim = q.rows();
  std::vector<Rational> poly = char_poly_rational(q);
  std::vector<std::pair<Rational, int>> rroots = rational_roots(poly);
  int covered = 0;
  for (const auto& [r, mult] : rroots) {
    es.values.push_back(to_complex(r));
    es.multiplicity.push_back(mult);
    es.exact.push_back(true);
    es.rational_value.push_back(r);
    covered += mult;
  }
  if (covered < es.dim) {
    // Numeric eigenvalues for the non-rational remainder: drop the ones
    // already accounted for by rational roots, cluster the rest.
    std::vector<Complex> numeric = eigenvalues(to_complex(q));
    double scale = 1.0;
    for (const Complex& v : numeric) scale = std::max(scale, std::abs(v));
    for (const auto& [r, mult] : rroots) {
      for (int k = 0; k < mult; ++k) {
        // Remove the numeric value closest to the exact root.
        size_t best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < numeric.size(); ++i) {
          double dist = std::abs(numeric[i] - to_complex(r));
          if (dist < bestd) {
            bestd = dist;
            best = i;
          }
        }
        if (bestd > 1e-6 * scale)
          throw Error(ErrorKind::Structural,
                      "numeric eigenvalues disagree with exact rational roots");
        numeric.erase(numeric.begin() + best);
      }
    }
    for (const Cluster& cl : cluster_eigenvalues(numeric, tol)) {
      es.values.push_back(cl.value);
      es.multiplicity.push_back(cl.count);
      es.exact.push_back(false);
      es.rational_value.push_back(Rational(0));
    }
  }
  apply_hints(es, hints, tol);
  return es;
}

EigenStructure eigen_structure(const CMat& q, const std::vector<Complex>& hints,
                               double tol) {
  EigenStructure es;
  es.dim = q.rows();
  for (const Cluster& cl : cluster_eigenvalues(eigenvalues(q), tol)) {
    es.values.push_back(cl.value);
    es.multiplicity.push_back(cl.count);
    es.exact.push_back(false);
    es.rational_value.push_back(Rational(0));
  }
  apply_hints(es, hints, tol);
  return es;
}

namespace {

/// Incremental complex span with tolerance (modified Gram-Schmidt).
class CSpan {
 public:
  CSpan(int dim, double tol) : dim_(dim), tol_(tol) {}
  int size() const { return static_cast<int>(basis_.size()); }
  bool add(CMat v) {
    double scale = std::max(1.0, v.max_abs());
    for (const CMat& b : basis_) {
      Complex proj(0);
      for (int i = 0; i < dim_; ++i) proj += std::conj(b(i, 0)) * v(i, 0);
      v = v - b * proj;
    }
    double norm = frobenius(v);
    if (norm <= tol_ * scale * 100) return false;
    basis_.push_back(v * Complex(1.0 / norm, 0));
    return true;
  }

 private:
  int dim_;
  double tol_;
  std::vector<CMat> basis_;
};

void normalize_chain_complex(std::vector<CMat>& chain) {
  CMat& top = chain.back();
  int pick = 0;
  double best = -1.0;
  for (int i = 0; i < top.rows(); ++i) {
    double a = std::abs(top(i, 0));
    if (a > best + 1e-14) {
      best = a;
      pick = i;
    }
  }
  Complex pivot = top(pick, 0);
  if (pivot == Complex(0)) return;
  Complex inv = Complex(1) / pivot;
  for (CMat& v : chain) v = v * inv;
}

void normalize_chain_exact(std::vector<RMat>& chain) {
  RMat& top = chain.back();
  int pick = 0;
  Rational best(0);
  for (int i = 0; i < top.rows(); ++i) {
    Rational a = abs_exact(top(i, 0));
    if (a > best) {
      best = a;
      pick = i;
    }
  }
  if (sgn(top(pick, 0)) == 0) return;
  Rational inv = 1 / top(pick, 0);
  for (RMat& v : chain) v = v * inv;
}

/// Builds the chains for one exact rational eigenvalue of a rational matrix.
std::vector<JordanChain> chains_exact(const RMat& q, const Rational& alpha,
                                      int mult) {
  const int d = q.rows();
  RMat m = q;
  for (int i = 0; i < d; ++i) m(i, i) -= alpha;
  // Kernel filtration of powers of m.
  std::vector<RMat> kernels;  // kernels[j] = basis of ker m^{j+1}
  RMat power = m;
  while (true) {
    RMat k = nullspace(power);
    kernels.push_back(k);
    if (k.cols() >= mult) break;
    if (kernels.size() > static_cast<size_t>(d))
      throw Error(ErrorKind::Structural, "kernel filtration failed to saturate");
    power = power * m;
  }
  int h = static_cast<int>(kernels.size());

  // Standard top-down chain extraction.  `occupied` spans ker m^{j-1}
  // together with the level-j members of taller chains.
  std::vector<JordanChain> out;
  std::vector<std::pair<int, RMat>> tops;  // (height, top vector)
  for (int j = h; j >= 1; --j) {
    RSpan span(d);
    if (j >= 2)
      for (int c = 0; c < kernels[j - 2].cols(); ++c)
        span.add(flatten(kernels[j - 2].col(c)));
    std::vector<RMat> level_members;
    for (const auto& [height, top] : tops) {
      // Member of that chain at level j: m^{height-j} top.
      RMat v = top;
      for (int s = 0; s < height - j; ++s) v = m * v;
      span.add(flatten(v));
    }
    for (int c = 0; c < kernels[j - 1].cols(); ++c) {
      RMat cand = kernels[j - 1].col(c);
      if (span.add(flatten(cand))) tops.emplace_back(j, cand);
    }
  }
  for (const auto& [height, top] : tops) {
    std::vector<RMat> chain(height);
    chain[height - 1] = top;
    for (int s = height - 2; s >= 0; --s) chain[s] = m * chain[s + 1];
    normalize_chain_exact(chain);
    JordanChain jc;
    jc.eigenvalue = to_complex(alpha);
    jc.exact = true;
    jc.eigen_rational = alpha;
    jc.vectors_exact = chain;
    for (const RMat& v : chain) jc.vectors.push_back(to_complex(v));
    out.push_back(std::move(jc));
  }
  int total = 0;
  for (const auto& c : out) total += c.height();
  if (total != mult)
    throw Error(ErrorKind::Structural, "Jordan chain extraction lost vectors");
  return out;
}

/// Numeric counterpart for one (possibly complex) eigenvalue.
std::vector<JordanChain> chains_numeric(const CMat& q, Complex alpha, int mult,
                                        double tol) {
  const int d = q.rows();
  CMat m = q;
  for (int i = 0; i < d; ++i) m(i, i) -= alpha;
  std::vector<CMat> kernels;
  CMat power = m;
  while (true) {
    CMat k = nullspace(power, tol);
    kernels.push_back(k);
    if (k.cols() >= mult) break;
    if (kernels.size() > static_cast<size_t>(d))
      throw Error(ErrorKind::Structural,
                  "numeric kernel filtration failed to saturate; adjust the "
                  "tolerance or provide eigenvalue hints");
    power = power * m;
  }
  int h = static_cast<int>(kernels.size());
  std::vector<JordanChain> out;
  std::vector<std::pair<int, CMat>> tops;
  for (int j = h; j >= 1; --j) {
    CSpan span(d, tol);
    if (j >= 2)
      for (int c = 0; c < kernels[j - 2].cols(); ++c)
        span.add(kernels[j - 2].col(c));
    for (const auto& [height, top] : tops) {
      CMat v = top;
      for (int s = 0; s < height - j; ++s) v = m * v;
      span.add(v);
    }
    for (int c = 0; c < kernels[j - 1].cols(); ++c) {
      CMat cand = kernels[j - 1].col(c);
      if (span.add(cand)) tops.emplace_back(j, cand);
    }
  }
  for (const auto& [height, top] : tops) {
    std::vector<CMat> chain(height);
    chain[height - 1] = top;
    for (int s = height - 2; s >= 0; --s) chain[s] = m * chain[s + 1];
    normalize_chain_complex(chain);
    JordanChain jc;
    jc.eigenvalue = alpha;
    jc.vectors = std::move(chain);
    out.push_back(std::move(jc));
  }
  int total = 0;
  for (const auto& c : out) total += c.height();
  if (total != mult)
    throw Error(ErrorKind::Structural,
                "numeric Jordan chain extraction lost vectors");
  return out;
}

}  // namespace

std::vector<JordanChain> jordan_basis(const RMat& q, const EigenStructure& es,
                                      double tol) {
  std::vector<JordanChain> chains;
  for (size_t i = 0; i < es.values.size(); ++i) {
    std::vector<JordanChain> part =
        es.exact[i]
            ? chains_exact(q, es.rational_value[i], es.multiplicity[i])
            : chains_numeric(to_complex(q), es.values[i], es.multiplicity[i],
                             tol);
    for (auto& c : part) chains.push_back(std::move(c));
  }
  return chains;
}

std::vector<JordanChain> jordan_basis(const CMat& q, const EigenStructure& es,
                                      double tol) {
  std::vector<JordanChain> chains;
  for (size_t i = 0; i < es.values.size(); ++i) {
    std::vector<JordanChain> part =
        chains_numeric(q, es.values[i], es.multiplicity[i], tol);
    for (auto& c : part) chains.push_back(std::move(c));
  }
  return chains;
}

namespace {

CDecomposition decompose_impl(const std::vector<JordanChain>& chains,
                              const CMat& c, const RMat* c_exact, double tol) {
  int d = c.rows();
  int total = 0;
  for (const auto& ch : chains) total += ch.height();
  if (total != d)
    throw Error(ErrorKind::Structural,
                "Jordan basis does not span the space");
  CDecomposition out;
  out.chains = chains;
  bool all_exact = c_exact != nullptr;
  for (const auto& ch : chains) all_exact = all_exact && ch.exact;

  if (all_exact) {
    RMat basis(d, d);
    int col = 0;
    for (const auto& ch : chains)
      for (const RMat& v : ch.vectors_exact) basis.set_col(col++, v);
    RMat gamma;
    if (!solve(basis, *c_exact, gamma))
      throw Error(ErrorKind::Structural, "exact decomposition failed");
    out.exact = true;
    col = 0;
    for (const auto& ch : chains) {
      std::vector<Rational> ge;
      std::vector<Complex> gc;
      for (int j = 0; j < ch.height(); ++j) {
        ge.push_back(gamma(col, 0));
        gc.push_back(to_complex(gamma(col, 0)));
        ++col;
      }
      out.gamma_exact.push_back(std::move(ge));
      out.gamma.push_back(std::move(gc));
    }
    return out;
  }

  CMat basis(d, d);
  int col = 0;
  for (const auto& ch : chains)
    for (const CMat& v : ch.vectors) basis.set_col(col++, v);
  CMat gamma = solve(basis, c, tol);
  col = 0;
  for (const auto& ch : chains) {
    std::vector<Complex> gc;
    for (int j = 0; j < ch.height(); ++j) gc.push_back(gamma(col++, 0));
    out.gamma.push_back(std::move(gc));
  }
  return out;
}

}  // namespace

CDecomposition decompose_C(const std::vector<JordanChain>& chains,
                           const CMat& c, double tol) {
  return decompose_impl(chains, c, nullptr, tol);
}

CDecomposition decompose_C(const std::vector<JordanChain>& chains,
                           const RMat& c, double tol) {
  CMat cc = to_complex(c);
  return decompose_impl(chains, cc, &c, tol);
}

double binom(int64_t K, int m) {
  if (m < 0 || K < m) return 0.0;
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= static_cast<double>(K - i) / (i + 1);
  return v;
}

namespace {

// Nonnegative integer power by squaring.  std::pow on complex arguments goes
// through exp(log(.)) and returns NaN for a zero base, which is a perfectly
// legitimate eigenvalue here.
Complex cpow_int(Complex a, int64_t n) {
  Complex r(1);
  while (n > 0) {
    if (n & 1) r *= a;
    a *= a;
    n >>= 1;
  }
  return r;
}

}  // namespace

CMat qk_on_chain(const JordanChain& chain, int64_t K) {
  if (K < 0) throw Error(ErrorKind::Structural, "negative power");
  const int nu = chain.height();
  const int d = chain.vectors[0].rows();
  Complex a = chain.eigenvalue;
  CMat out(d, 1);
  for (int j = 0; j < nu; ++j) {
    int ell = nu - 1 - j;  // binomial index
    double b = binom(K, ell);
    if (b == 0.0) continue;
    // Exponent K - ell is >= 0 whenever the binomial is nonzero.
    Complex factor = cpow_int(a, K - ell);
    out = out + chain.vectors[j] * (Complex(b, 0) * factor);
  }
  return out;
}

Complex geometric_binomial_sum(Complex alpha, int64_t K, int ell, double tol) {
  if (std::abs(alpha - Complex(1)) <= tol) {
    return Complex(binom(K, ell + 1) + binom(K, ell), 0);
  }
  Complex am1 = alpha - Complex(1);
  Complex total(0);
  // binom(K, ell) alpha^{K-ell+1} / (alpha - 1)
  if (K >= ell)
    total += Complex(binom(K, ell), 0) *
             cpow_int(alpha, K - ell + 1) / am1;
  for (int j = 1; j <= ell; ++j) {
    if (K < ell - j) continue;
    Complex term = Complex(binom(K, ell - j), 0) *
                   cpow_int(alpha, K - ell + j);
    term /= cpow_int(am1, j + 1);
    if (j % 2 == 1) term = -term;
    total += term;
  }
  Complex tail = Complex(1) / cpow_int(am1, ell + 1);
  // Constant term carries (-1)^{ell+1}.
  total += (ell % 2 == 0) ? -tail : tail;
  return total;
}

CMat geometric_sum_on_chain(const JordanChain& chain, int64_t K, double tol) {
  const int nu = chain.height();
  const int d = chain.vectors[0].rows();
  CMat out(d, 1);
  for (int j = 0; j < nu; ++j) {
    int ell = nu - 1 - j;
    out = out + chain.vectors[j] * geometric_binomial_sum(chain.eigenvalue, K,
                                                          ell, tol);
  }
  return out;
}

}  // namespace cesaro
