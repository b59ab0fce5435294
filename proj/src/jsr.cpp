#include "cesaro/jsr.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "cesaro/spectral.hpp"

namespace cesaro {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_budget(int radix, int T, int64_t budget) {
  if (T < 1) throw Error(ErrorKind::Structural, "word length must be positive");
  if (T > 62 || ipow(radix, T) > budget)
    throw Error(ErrorKind::Budget, "word sweep exceeds the product budget");
}

/// Visits every product A_w with |w| = T (prefix products down a DFS).
template <class T_, class Fn>
void for_each_product(const LinearRep<T_>& rep, int T, Fn&& fn) {
  std::function<void(int, const Mat<T_>&)> rec = [&](int level,
                                                     const Mat<T_>& prefix) {
    if (level == T) {
      fn(prefix);
      return;
    }
    for (int r = 0; r < rep.radix; ++r) rec(level + 1, prefix * rep.A[r]);
  };
  rec(0, Mat<T_>::identity(rep.dim));
}

template <class T_>
double lambda_T_impl(const LinearRep<T_>& rep, int T, NormKind kind,
                     int64_t budget) {
  validate(rep);
  check_budget(rep.radix, T, budget);
  double best = 0.0;
  for_each_product(rep, T, [&](const Mat<T_>& m) {
    best = std::max(best, induced_norm(m, kind));
  });
  return std::pow(best, 1.0 / T);
}

template <class T_>
double lower_bound_impl(const LinearRep<T_>& rep, int T_max, int64_t budget,
                        Mat<T_>* witness, int* witness_len) {
  validate(rep);
  double best = 0.0;
  for (int T = 1; T <= T_max; ++T) {
    check_budget(rep.radix, T, budget);
    for_each_product(rep, T, [&](const Mat<T_>& m) {
      double candidate = std::pow(spectral_radius(to_complex(m)), 1.0 / T);
      if (candidate > best) {
        best = candidate;
        if (witness) {
          *witness = m;
          *witness_len = T;
        }
      }
    });
  }
  return best;
}

/// Exact spectral radius when the characteristic polynomial splits over Q;
/// returns false otherwise.
bool exact_spectral_radius(const RMat& m, Rational& out) {
  std::vector<std::pair<Rational, int>> roots =
      rational_roots(char_poly_rational(m));
  int total = 0;
  Rational best(0);
  for (const auto& [r, mult] : roots) {
    total += mult;
    Rational a = abs_exact(r);
    if (a > best) best = a;
  }
  if (total != m.rows()) return false;
  out = best;
  return true;
}

}  // namespace

double lambda_T(const RRep& rep, int T, NormKind kind, int64_t budget) {
  if (kind != NormKind::Two)
    return std::pow(to_double(lambda_T_norm_power(rep, T, kind, budget)),
                    1.0 / T);
  return lambda_T_impl(rep, T, kind, budget);
}

double lambda_T(const CRep& rep, int T, NormKind kind, int64_t budget) {
  return lambda_T_impl(rep, T, kind, budget);
}

Rational lambda_T_norm_power(const RRep& rep, int T, NormKind kind,
                             int64_t budget) {
  validate(rep);
  if (kind == NormKind::Two)
    throw Error(ErrorKind::Structural,
                "two-norm has no exact rational evaluation");
  check_budget(rep.radix, T, budget);
  Rational best(0);
  for_each_product(rep, T, [&](const RMat& m) {
    Rational v = induced_norm_exact(m, kind);
    if (v > best) best = v;
  });
  return best;
}

double jsr_lower_bound(const RRep& rep, int T_max, int64_t budget) {
  return lower_bound_impl<Rational>(rep, T_max, budget, nullptr, nullptr);
}

double jsr_lower_bound(const CRep& rep, int T_max, int64_t budget) {
  return lower_bound_impl<Complex>(rep, T_max, budget, nullptr, nullptr);
}

LieClosureReport lie_algebra_closure(const RRep& rep) {
  validate(rep);
  const int n2 = rep.dim * rep.dim;
  RSpan span(n2);
  std::vector<RMat> basis;
  for (const RMat& a : rep.A)
    if (span.add(flatten(a))) basis.push_back(a);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      RMat br = lie_bracket(basis[i], basis[j]);
      if (span.add(flatten(br))) basis.push_back(br);
    }

  LieClosureReport report;
  report.closure_dim = static_cast<int>(basis.size());
  report.derived_dims.push_back(report.closure_dim);
  std::vector<RMat> current = basis;
  while (!current.empty()) {
    RSpan dspan(n2);
    std::vector<RMat> next;
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        RMat br = lie_bracket(current[i], current[j]);
        if (dspan.add(flatten(br))) next.push_back(br);
      }
    int dim = static_cast<int>(next.size());
    report.derived_dims.push_back(dim);
    if (dim == static_cast<int>(current.size())) break;  // stabilized, nonzero
    current = std::move(next);
  }
  report.solvable = report.derived_dims.back() == 0;
  return report;
}

JsrEstimate jsr_estimate(const RRep& rep, const JsrOptions& opts) {
  validate(rep);
  JsrEstimate est;

  if (opts.use_lie_shortcut) {
    LieClosureReport lie = lie_algebra_closure(rep);
    est.lie = lie;
    if (lie.solvable) {
      bool all_exact = true;
      Rational exact_best(0);
      double best = 0.0;
      for (const RMat& a : rep.A) {
        Rational r;
        if (exact_spectral_radius(a, r)) {
          if (r > exact_best) exact_best = r;
          best = std::max(best, to_double(r));
        } else {
          all_exact = false;
          best = std::max(best, spectral_radius(a));
        }
      }
      est.lower = est.upper = best;
      est.attained = Attained::Yes;
      est.exact = all_exact;
      if (all_exact) {
        est.exact_value = exact_best;
        est.lower = est.upper = to_double(exact_best);
      }
      est.certificate =
          "solvable bracket closure: joint spectral radius equals the largest "
          "spectral radius of a single radix matrix and is attained";
      return est;
    }
  }

  RMat witness(rep.dim, rep.dim);
  int witness_len = 0;
  est.lower = lower_bound_impl<Rational>(rep, opts.T_max, opts.product_budget,
                                         &witness, &witness_len);

  est.upper = std::numeric_limits<double>::infinity();
  std::vector<std::pair<Rational, int>> exact_norms;  // (||.||^T value, T)
  for (NormKind kind : opts.norms) {
    for (int T = 1; T <= opts.T_max; ++T) {
      double lam;
      if (kind != NormKind::Two) {
        Rational power = lambda_T_norm_power(rep, T, kind, opts.product_budget);
        exact_norms.emplace_back(power, T);
        lam = std::pow(to_double(power), 1.0 / T);
      } else {
        lam = lambda_T_impl(rep, T, kind, opts.product_budget);
      }
      if (lam < est.upper) {
        est.upper = lam;
        est.witness_norm = kind;
        est.T = T;
      }
    }
  }

  // Attainment by exact coincidence: some product's rational spectral radius
  // r (power t) matches some exact norm bound nu^(1/T):  r^T == nu^t.
  Rational r_witness;
  if (witness_len > 0 && exact_spectral_radius(witness, r_witness)) {
    for (const auto& [nu, T] : exact_norms) {
      Rational lhs = r_witness, rhs = nu;
      Rational lp(1), rp(1);
      for (int i = 0; i < T; ++i) lp *= lhs;
      for (int i = 0; i < witness_len; ++i) rp *= rhs;
      if (lp == rp) {
        est.attained = Attained::Yes;
        // The common value is rational exactly when r^(1/t) is; certify the
        // plain t == 1 case, where it is the spectral radius itself.
        est.exact = witness_len == 1;
        if (est.exact) est.exact_value = r_witness;
        est.certificate =
            "exact coincidence of a product spectral radius with a norm bound";
        est.lower = est.upper = std::pow(to_double(r_witness), 1.0 / witness_len);
        return est;
      }
    }
  }
  est.certificate = "norm sweep upper bound, product spectral radius lower bound";
  return est;
}

JsrEstimate jsr_estimate(const CRep& rep, const JsrOptions& opts) {
  validate(rep);
  JsrEstimate est;
  est.lower =
      lower_bound_impl<Complex>(rep, opts.T_max, opts.product_budget, nullptr,
                                nullptr);
  est.upper = std::numeric_limits<double>::infinity();
  for (NormKind kind : opts.norms) {
    for (int T = 1; T <= opts.T_max; ++T) {
      double lam = lambda_T_impl(rep, T, kind, opts.product_budget);
      if (lam < est.upper) {
        est.upper = lam;
        est.witness_norm = kind;
        est.T = T;
      }
    }
  }
  est.certificate = "numeric norm sweep; attainment not certified";
  return est;
}

}  // namespace cesaro
