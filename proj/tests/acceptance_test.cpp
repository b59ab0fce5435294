// Acceptance suite: one pass/fail line per criterion.
//
// Three sub-checks test printed values that exact recomputation contradicts;
// they are reported as FAIL together with the measured value and the reason,
// and the process exit code treats "fails exactly as documented" as the
// expected state.  See the notes next to criteria 2, 8 and 9.

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cesaro/fixtures.hpp"
#include "cesaro/harness.hpp"
#include "cesaro/io.hpp"

using namespace cesaro;

namespace {

struct Outcome {
  bool pass = false;           // the criterion as literally stated
  bool expected_red = false;   // a documented discrepancy: FAIL is expected
  bool as_documented = false;  // the measured behavior matches the analysis
  std::string note;
};

double cdist(const CMat& a, const CMat& b) { return frobenius(a - b); }

double scalar_of(const RRep& rep, const CMat& v) {
  Complex s = 0;
  for (int j = 0; j < rep.dim; ++j) s += to_complex(rep.L(0, j)) * v(j, 0);
  return s.real();
}

int count_11(int64_t n) {
  int c = 0;
  while (n >= 3) {
    if ((n & 3) == 3) ++c;
    n >>= 1;
  }
  return c;
}

// --- criterion 1: term evaluation against independent oracles -------------

Outcome criterion_terms() {
  Outcome out;
  RRep rs = fixtures::rudin_shapiro();
  RRep sd = fixtures::sum_of_digits();
  for (int64_t n = 0; n < (int64_t(1) << 16); ++n) {
    Rational rs_expect(count_11(n) % 2 == 0 ? 1 : -1);
    if (eval_term(rs, n) != rs_expect) {
      out.note = "Rudin-Shapiro mismatch at n=" + std::to_string(n);
      return out;
    }
    if (eval_term(sd, n) != Rational(std::popcount(uint64_t(n)))) {
      out.note = "sum-of-digits mismatch at n=" + std::to_string(n);
      return out;
    }
  }
  out.pass = true;
  out.note = "both sequences exact for n < 2^16";
  return out;
}

// --- criterion 2: norm sweeps ---------------------------------------------

Outcome criterion_jsr() {
  Outcome out;
  out.expected_red = true;
  RRep ms = fixtures::mergesort();
  Rational l4 = lambda_T_norm_power(ms, 4, NormKind::One);
  // Max one-norm restricted to products whose leftmost factor is A_0.
  Rational a0_leading(0);
  for (int mask = 0; mask < 8; ++mask) {
    RMat prod = ms.A[0];
    for (int b = 2; b >= 0; --b) prod = prod * ms.A[(mask >> b) & 1];
    Rational norm = induced_norm_exact(prod, NormKind::One);
    if (norm > a0_leading) a0_leading = norm;
  }
  bool rs4_ok = true;
  RRep rs4 = fixtures::rudin_shapiro4();
  for (int T = 1; T <= 4; ++T)
    if (lambda_T_norm_power(rs4, T, NormKind::One) != Rational(1)) rs4_ok = false;

  out.pass = (l4 == Rational(9)) && rs4_ok;
  out.as_documented = (l4 == Rational(13)) && (a0_leading == Rational(9)) && rs4_ok;
  out.note = "mergesort lambda_4^4 (one-norm) = " + rational_to_string(l4) +
             ", stated value 9 is only the max over products led by A_0 (= " +
             rational_to_string(a0_leading) +
             "); exhaustive exact enumeration over all 16 length-4 products "
             "gives 13, and the representation is already reduced. "
             "Rudin-Shapiro radix-4 lambda_T = 1 for T = 1..4: " +
             (rs4_ok ? "ok" : "violated");
  return out;
}

// --- criterion 3: solvable-Lie-algebra shortcut ---------------------------

Outcome criterion_lie() {
  Outcome out;
  RRep vdc = fixtures::vdc_discrepancy();
  LieClosureReport lie = lie_algebra_closure(vdc);
  JsrEstimate est = jsr_estimate(vdc);
  bool dims_ok = lie.derived_dims == std::vector<int>{4, 3, 1, 0};
  out.pass = dims_ok && lie.solvable && est.exact &&
             est.exact_value == Rational(1) && est.attained == Attained::Yes;
  out.note = "derived series ";
  for (size_t i = 0; i < lie.derived_dims.size(); ++i)
    out.note += (i ? ", " : "") + std::to_string(lie.derived_dims[i]);
  out.note += lie.solvable ? "; solvable" : "; NOT solvable";
  out.note += "; lambda_* = " + rational_to_string(est.exact_value) +
              (est.attained == Attained::Yes ? " attained (exact)" : " NOT attained");
  return out;
}

// --- criterion 4: spectral data against printed vectors -------------------

bool spectrum_is(const RMat& q, const std::vector<Complex>& hints,
                 std::vector<std::pair<Rational, int>> expect) {
  EigenStructure es = eigen_structure(q, hints);
  if (es.values.size() != expect.size()) return false;
  std::vector<std::pair<Rational, int>> found;
  for (size_t i = 0; i < es.values.size(); ++i) {
    if (!es.exact[i]) return false;
    found.emplace_back(es.rational_value[i], es.multiplicity[i]);
  }
  std::sort(found.begin(), found.end());
  std::sort(expect.begin(), expect.end());
  return found == expect;
}

// Sum of the decomposition restricted to one eigenvalue.
CMat projection_at(const RRep& rep, const Rational& eigenvalue) {
  EigenStructure es = eigen_structure(rep.Q(), rep.eigen_hints);
  std::vector<JordanChain> chains = jordan_basis(rep.Q(), es);
  CDecomposition dec = decompose_C(chains, rep.C);
  CMat acc(rep.dim, 1);
  for (size_t k = 0; k < dec.chains.size(); ++k) {
    if (std::abs(dec.chains[k].eigenvalue - to_complex(eigenvalue)) > 1e-9)
      continue;
    for (int j = 0; j < dec.chains[k].height(); ++j)
      acc = acc + dec.chains[k].vectors[j] * dec.gamma[k][j];
  }
  return acc;
}

Outcome criterion_spectral() {
  Outcome out;
  RRep cq = fixtures::coquet();
  RRep lw = fixtures::lipmaa_wallen();
  bool spectra = spectrum_is(cq.Q(), cq.eigen_hints, {{Rational(3), 2}, {Rational(0), 1}}) &&
                 spectrum_is(lw.Q(), lw.eigen_hints,
                             {{Rational(4), 1}, {Rational(2), 3}, {Rational(1), 4}});

  auto col = [](std::vector<Rational> v) {
    RMat m(int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(int(i), 0) = v[i];
    return m;
  };
  double worst = 0;
  worst = std::max(worst, cdist(projection_at(cq, Rational(3)),
                                to_complex(col({Rational(2, 3), Rational(1, 3),
                                                Rational(1, 3)}))));
  worst = std::max(worst, cdist(projection_at(cq, Rational(0)),
                                to_complex(col({Rational(1, 3), Rational(-1, 3),
                                                Rational(-1, 3)}))));
  std::vector<Rational> v4(8, Rational(1, 8));
  std::vector<Rational> v2 = {Rational(3, 8),  Rational(1, 8),  Rational(1, 8),
                              Rational(-1, 8), Rational(1, 8),  Rational(-1, 8),
                              Rational(-1, 8), Rational(-3, 8)};
  std::vector<Rational> v1 = {Rational(1, 2), Rational(-1, 4), Rational(-1, 4),
                              Rational(0),    Rational(-1, 4), Rational(0),
                              Rational(0),    Rational(1, 4)};
  worst = std::max(worst, cdist(projection_at(lw, Rational(4)), to_complex(col(v4))));
  worst = std::max(worst, cdist(projection_at(lw, Rational(2)), to_complex(col(v2))));
  worst = std::max(worst, cdist(projection_at(lw, Rational(1)), to_complex(col(v1))));

  out.pass = spectra && worst <= 1e-10;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", worst);
  out.note = std::string(spectra ? "spectra exact" : "SPECTRA WRONG") +
             "; worst distance to printed vectors " + buf;
  return out;
}

// --- criterion 5: dilation exactness and refusal --------------------------

Outcome criterion_dilation() {
  Outcome out;
  RRep ms = fixtures::mergesort();
  RMat v = RMat::col_vec({Rational(0), Rational(0), Rational(-1), Rational(1)});
  if (!(ms.Q() * v == Rational(2) * v)) {
    out.note = "mergesort eigenvector sanity check failed";
    return out;
  }
  JordanChain chain;
  chain.eigenvalue = Complex(2, 0);
  chain.vectors = {to_complex(v)};
  DilationSystem basic = make_dilation_system(ms, chain);
  SolutionGrid grid = solve_jordan_system(basic, 1.0, 10);
  double worst = 0;
  for (int64_t k = 0; k < grid.nodes(); ++k) {
    double x = grid.node_x(k);
    CMat expect(4, 1, {Complex(0), Complex(0), Complex(-x, 0), Complex(x, 0)});
    worst = std::max(worst, cdist(grid.values[k], expect));
  }
  bool profile_ok = worst <= 1e-12;

  // Dilation residual on every exact-unrolled grid of the fixture expansions.
  double worst_residual = 0;
  for (const RRep& rep : fixtures::rational_corpus()) {
    IntegerExpansion exp = lrtoae2(rep);
    for (size_t i = 0; i < exp.base.systems.size(); ++i)
      worst_residual = std::max(
          worst_residual, residual(exp.base.systems[i], exp.base.grids[i]));
  }
  worst_residual = std::max(worst_residual, residual(basic, grid));
  bool residual_ok = worst_residual <= 1e-12;

  // Triangular tiling: rho = lambda_* = 1, no continuous solution.
  bool refused = false;
  CRep tri = fixtures::triangular_tiling();
  EigenStructure es = eigen_structure(tri.Q(), tri.eigen_hints);
  std::vector<JordanChain> chains = jordan_basis(tri.Q(), es);
  if (!chains.empty()) {
    DilationSystem sys = make_dilation_system(tri, chains.front());
    try {
      solve_jordan_system(sys, 1.0, 4);
    } catch (const Error& e) {
      refused = (e.kind() == ErrorKind::Admissibility);
    }
  }
  out.pass = profile_ok && residual_ok && refused;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "profile defect %.3e, worst grid residual %.3e, refusal %s",
                worst, worst_residual, refused ? "raised" : "MISSING");
  out.note = buf;
  return out;
}

// --- criterion 6: cascade rate --------------------------------------------

Outcome criterion_cascade() {
  Outcome out;
  RRep bil = fixtures::billingsley(Rational(1, 4));
  EigenStructure es = eigen_structure(bil.Q());
  std::vector<JordanChain> chains = jordan_basis(bil.Q(), es);
  DilationSystem sys = make_dilation_system(bil, chains.front());
  // Depth 21 so the finite grid does not converge exactly before iteration 20.
  ConvergenceProbe probe = probe_fk_convergence(sys, 0.75, 21, 21);
  bool ratios_ok = probe.ratios.size() >= 20;
  double worst_ratio_err = 0;
  for (size_t i = 5; i < probe.ratios.size() && i <= 20; ++i)
    worst_ratio_err = std::max(worst_ratio_err, std::abs(probe.ratios[i] - 0.75));
  ratios_ok = ratios_ok && worst_ratio_err <= 0.075;

  SolutionGrid grid = solve_jordan_system(sys, 0.75, 10);
  bool monotone = true;
  for (int64_t k = 1; k < grid.nodes(); ++k)
    if (grid.values[k](0, 0).real() < grid.values[k - 1](0, 0).real() - 1e-14)
      monotone = false;
  out.pass = ratios_ok && monotone;
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "worst |ratio - 3/4| = %.4f over iterations 5..20; grid %s",
                worst_ratio_err, monotone ? "monotone" : "NOT monotone");
  out.note = buf;
  return out;
}

// --- criterion 7: closed-form chain oracles -------------------------------

Outcome criterion_chain_formulas() {
  Outcome out;
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> eig(-3, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int64_t> kdist(0, 30);
  double worst = 0;
  int done = 0;
  while (done < 200) {
    int d = 2 + done % 4;
    RMat j(d, d);
    std::vector<std::pair<Rational, int>> blocks;  // eigenvalue, start index
    std::vector<int> starts, heights;
    int i = 0;
    while (i < d) {
      Rational a(eig(rng));
      j(i, i) = a;
      int h = 1;
      if (i + 1 < d && coin(rng)) {
        j(i + 1, i + 1) = a;
        j(i, i + 1) = Rational(1);
        h = 2;
      }
      starts.push_back(i);
      heights.push_back(h);
      i += h;
    }
    RMat p;
    do {
      p = RMat(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) p(r, c) = Rational(entry(rng));
    } while (rank(p) < d);
    RMat q = p * j * inverse(p);
    for (size_t b = 0; b < starts.size() && done < 200; ++b, ++done) {
      JordanChain ch;
      ch.eigenvalue = to_complex(j(starts[b], starts[b]));
      RMat top(d, 1);
      for (int h = 0; h < heights[b]; ++h) {
        top = p.col(starts[b] + h);
        ch.vectors.push_back(to_complex(top));
      }
      int64_t K = kdist(rng);
      RMat direct = top, geo = top;
      for (int64_t k = 1; k <= K; ++k) {
        direct = q * direct;
        geo = geo + direct;
      }
      double scale = std::max(1.0, frobenius(to_complex(direct)));
      worst = std::max(worst, cdist(qk_on_chain(ch, K), to_complex(direct)) / scale);
      double gscale = std::max(1.0, frobenius(to_complex(geo)));
      worst = std::max(
          worst, cdist(geometric_sum_on_chain(ch, K), to_complex(geo)) / gscale);
    }
  }
  out.pass = worst <= 1e-9;
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst relative error %.3e over 200 systems", worst);
  out.note = buf;
  return out;
}

// --- criterion 8: expansions against brute force --------------------------

Outcome criterion_envelopes() {
  Outcome out;
  out.expected_red = true;
  std::string parts;

  RRep vdc = fixtures::vdc_discrepancy();
  IntegerExpansion vdc_exp = lrtoae2(vdc);
  ComparisonReport vr = compare_integers(vdc, vdc_exp, 1 << 8, 1 << 16);
  bool vdc_ok = vr.envelope_ok;
  parts += "van der Corput O(log N / N): " + std::string(vdc_ok ? "ok" : "FAILED");

  RRep cq = fixtures::coquet();
  IntegerExpansion cq_exp = lrtoae2(cq);
  ComparisonReport cr = compare_integers(cq, cq_exp, 1 << 8, int64_t(1) << 20);
  // Positivity of the periodic coefficient Phi(t) = L Gamma / 3^t on a
  // 10^4-point grid.
  double min_phi = 1e9;
  for (int i = 0; i < 10000; ++i) {
    double t = 5.0 + double(i) / 10000.0;
    CMat g = eval_regular_part(cq_exp, t, 1e-8);
    min_phi = std::min(min_phi, scalar_of(cq, g) / std::pow(3.0, t));
  }
  bool cq_ok = cr.envelope_ok && min_phi > 0;
  char phibuf[48];
  std::snprintf(phibuf, sizeof phibuf, "%.4f", min_phi);
  parts += "; Coquet O(1) and min Phi = " + std::string(phibuf) + " > 0: " +
           (cq_ok ? "ok" : "FAILED");

  RRep rs4 = fixtures::rudin_shapiro4();
  IntegerExpansion rs_exp = lrtoae2(rs4);
  ComparisonReport rr = compare_integers(rs4, rs_exp, 1 << 8, int64_t(1) << 20);
  bool rs_ok = rr.envelope_ok;
  parts += "; Rudin-Shapiro O(1): " + std::string(rs_ok ? "ok" : "FAILED");

  // Rescaled identity: the stated bound |2 Sigma/N - B^{-1/2} cosh(...)| <=
  // c/N carries a factor-2 slip; the sum satisfies Sigma = N Phi + O(1) with
  // Phi(t) = B^{-1/2} cosh((t - 1/2) ln B), so 2 Sigma/N converges to twice
  // the stated curve.  Both the literal and the corrected bound are measured.
  const int B = 2;
  RRep ri = fixtures::rescaled_identity(B);
  RunningSumAccumulator<Rational> acc(ri);
  std::vector<double> logs, literal, corrected, envelope;
  int64_t next = 1 << 8;
  while (acc.current_index() < (int64_t(1) << 20)) {
    acc.advance();
    int64_t N = acc.current_index();
    if (N < next) continue;
    next = std::max(next + 1, int64_t(std::llround(double(next) * 1.04)));
    double sigma = 0;
    for (int jj = 0; jj < ri.dim; ++jj)
      sigma += ri.L(0, jj).get_d() * acc.total()(jj, 0).get_d();
    double t = std::log2(double(N));
    t -= std::floor(t);
    double phi = std::pow(double(B), -0.5) *
                 std::cosh((t - 0.5) * std::log(double(B)));
    logs.push_back(std::log2(double(N)));
    literal.push_back(std::abs(2 * sigma / double(N) - phi));
    corrected.push_back(std::abs(2 * sigma / double(N) - 2 * phi));
    envelope.push_back(1.0 / double(N));
  }
  EnvelopeFit lit = fit_envelope(logs, literal, envelope);
  EnvelopeFit cor = fit_envelope(logs, corrected, envelope);
  parts += std::string("; rescaled identity literal c/N bound: ") +
           (lit.ok ? "ok" : "FAILED (2 Sigma/N converges to twice the stated "
                            "catenary; factor-2 slip)") +
           ", corrected bound |2 Sigma/N - 2 Phi| <= c/N: " +
           (cor.ok ? "ok" : "FAILED");

  out.pass = vdc_ok && cq_ok && rs_ok && lit.ok;
  out.as_documented = vdc_ok && cq_ok && rs_ok && !lit.ok && cor.ok;
  out.note = parts;
  return out;
}

// --- criterion 9: rosette arcs --------------------------------------------

Outcome criterion_rosette() {
  Outcome out;
  out.expected_red = true;
  RosetteOptions opts;
  opts.theta = 2 * M_PI / 5;
  opts.commensurable = true;
  opts.p = 2;
  opts.q = 5;
  opts.t_points = 1000;
  RosetteReport rep = rosette_check(opts);
  bool period_ok = rep.max_period_defect <= 1e-6;
  bool antipodal_ok = rep.max_antipodal_defect <= 1e-6;

  // Closed form at integer t, K <= 50.
  CRep rosette = make_rosette_rep(opts.theta);
  IntegerExpansion exp = lrtoae2(rosette);
  double s2 = std::sin(opts.theta / 2), c2 = std::cos(opts.theta / 2);
  double integer_defect = 0;
  for (int K = 2; K <= 50; ++K) {
    CMat g = eval_regular_part(exp, double(K), 1e-11);
    double gx = s2 * s2 + c2 * std::cos((K - 0.5) * opts.theta);
    double gy = s2 * c2 + c2 * std::sin((K - 0.5) * opts.theta);
    integer_defect = std::max(integer_defect,
                              std::hypot(g(0, 0).real() - gx, g(1, 0).real() - gy));
  }
  bool integer_ok = integer_defect <= 1e-9;

  RosetteOptions irr;
  irr.theta = 1.0;
  irr.commensurable = false;
  irr.t_points = 256;
  RosetteReport irr_rep = rosette_check(irr);
  bool irrational_ok = irr_rep.min_shift_defect > 1e-6;

  out.pass = period_ok && antipodal_ok && integer_ok && irrational_ok;
  // The antipodal identity only follows from the integer-shift rotation
  // Gamma(t+1) - Omega = R_theta (Gamma(t) - Omega) when the half-period
  // 2^{-kappa} q is an integer (odd p).  For theta = 2 pi / 5 the shift 5/2
  // is a half-integer and the true arc violates the identity; the arc itself
  // is confirmed against brute-force sums (1.5M terms, defect ~1e-6) and the
  // integer closed form.  Odd-p angles (e.g. pi/3) satisfy it to 1e-15.
  out.as_documented = period_ok && !antipodal_ok &&
                      rep.max_antipodal_defect > 0.1 && integer_ok &&
                      irrational_ok;
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "period-5 defect %.3e; antipodal defect %.3e (identity "
                "invalid for even p, see note); closed form K<=50 defect "
                "%.3e; irrational run min shift defect %.3e",
                rep.max_period_defect, rep.max_antipodal_defect,
                integer_defect, irr_rep.min_shift_defect);
  out.note = buf;
  return out;
}

// --- criterion 10: coefficient continuity across integer t ----------------

Outcome criterion_continuity() {
  Outcome out;
  struct Case {
    const char* name;
    RRep rep;
  };
  std::vector<Case> cases = {
      {"sum-of-digits", fixtures::sum_of_digits()},
      {"Coquet", fixtures::coquet()},
      {"van der Corput", fixtures::vdc_discrepancy()},
      {"Rudin-Shapiro radix 4", fixtures::rudin_shapiro4()},
      {"identity", fixtures::identity_sequence(2)},
  };
  out.pass = true;
  double worst_margin = 0;
  for (const Case& c : cases) {
    IntegerExpansion exp = lrtoae2(c.rep);
    if (exp.base.terms.empty()) continue;
    // Module Hoelder exponent: weakest over the retained chains.
    double alpha = 1.0;
    for (const ExpansionTerm& term : exp.base.terms)
      alpha = std::min(alpha, holder_exponent(std::abs(term.eigenvalue),
                                              exp.base.lambda, exp.base.radix));
    // Hoelder constant from the solution grids, with 4x headroom.
    double c_grid = 0;
    for (const SolutionGrid& grid : exp.base.grids) {
      double h = 1.0 / double(grid.nodes() - 1);
      for (int64_t k = 1; k < grid.nodes(); ++k)
        c_grid = std::max(c_grid, cdist(grid.values[k], grid.values[k - 1]) /
                                      std::pow(h, alpha));
    }
    double bound_c = 4.0 * std::max(1.0, c_grid);
    const double eps = 1e-6;
    for (int K = 5; K <= 7; ++K) {
      CMat lo = eval_regular_part(exp, K - eps, 1e-12);
      CMat hi = eval_regular_part(exp, K + eps, 1e-12);
      double scale = std::max(1.0, frobenius(eval_regular_part(exp, double(K), 1e-12)));
      double jump = cdist(hi, lo) / scale;
      double bound = bound_c * std::pow(eps, alpha);
      worst_margin = std::max(worst_margin, jump / bound);
      if (jump > bound) out.pass = false;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "worst jump / (c eps^alpha) = %.3e over 5 fixtures, t = 5..7",
                worst_margin);
  out.note = buf;
  return out;
}

// --- criterion 11: structural invariants ----------------------------------

Outcome criterion_invariants() {
  Outcome out;
  std::mt19937 rng(101);
  for (const RRep& rep : fixtures::rational_corpus()) {
    RMat qk = rep.C;
    for (int K = 0; K <= 8; ++K) {
      if (running_sum_words(rep, K, Rational(1), SumMethod::Digitwise) != qk) {
        out.note = "S_K(1) != Q^K C for " + rep.name;
        return out;
      }
      if (K <= 5) {
        std::uniform_int_distribution<int> num(0, 81);
        for (int trial = 0; trial < 3; ++trial) {
          Rational x(num(rng), 81);
          x.canonicalize();
          if (running_sum_words(rep, K, x, SumMethod::Naive) !=
              running_sum_words(rep, K, x, SumMethod::Digitwise)) {
            out.note = "digitwise != naive for " + rep.name;
            return out;
          }
        }
      }
      qk = rep.Q() * qk;
    }
    std::uniform_int_distribution<int64_t> ns(0, 2000);
    for (int trial = 0; trial < 6; ++trial) {
      int64_t N = ns(rng);
      if (running_sum_integers(rep, N, IntegerSumMethod::Brute) !=
          running_sum_integers(rep, N, IntegerSumMethod::Decomposition)) {
        out.note = "integer sum paths disagree for " + rep.name;
        return out;
      }
    }
    RRep red = reduce(rep);
    for (int64_t n = 0; n < 300; ++n)
      if (eval_term(red, n) != eval_term(rep, n)) {
        out.note = "reduce broke " + rep.name;
        return out;
      }
    if (is_insensitive(rep)) {
      RRep sq = radix_power(rep, 2);
      for (int64_t n = 0; n < 300; ++n)
        if (eval_term(sq, n) != eval_term(rep, n)) {
          out.note = "radix_power broke " + rep.name;
          return out;
        }
    }
  }
  RRep inferred = infer_representation(
      2, [](int64_t n) { return Rational(std::popcount(uint64_t(n))); });
  RRep sd = fixtures::sum_of_digits();
  for (int64_t n = 0; n < 2048; ++n)
    if (eval_term(inferred, n) != eval_term(sd, n)) {
      out.note = "inference drifted from the oracle";
      return out;
    }
  out.pass = true;
  out.note = "all exact identities hold on the rational corpus";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    Outcome (*run)();
  };
  Entry entries[] = {
      {"term evaluation against independent oracles", criterion_terms},
      {"joint-spectral-radius norm sweeps", criterion_jsr},
      {"solvable Lie algebra shortcut (van der Corput)", criterion_lie},
      {"spectral decompositions (Coquet, Lipmaa-Wallen)", criterion_spectral},
      {"dilation exactness and admissibility refusal", criterion_dilation},
      {"cascade convergence rate (Billingsley 1/4)", criterion_cascade},
      {"closed-form chain power / geometric-sum oracles", criterion_chain_formulas},
      {"asymptotic expansions vs brute force envelopes", criterion_envelopes},
      {"rosette arcs (2 pi / 5 and irrational angle)", criterion_rosette},
      {"coefficient continuity across integer t", criterion_continuity},
      {"structural invariants on the rational corpus", criterion_invariants},
  };
  bool all_expected = true;
  int id = 0;
  for (const Entry& entry : entries) {
    ++id;
    Outcome out;
    try {
      out = entry.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("exception: ") + e.what();
    }
    bool expected_state =
        out.expected_red ? (!out.pass && out.as_documented) : out.pass;
    if (!expected_state) all_expected = false;
    std::printf("[%2d] %s %s%s\n     %s\n", id, out.pass ? "PASS" : "FAIL",
                entry.title,
                (!out.pass && out.expected_red && out.as_documented)
                    ? " (fails exactly as documented)"
                    : "",
                out.note.c_str());
  }
  std::printf("overall: %s\n",
              all_expected ? "all criteria in their expected state"
                           : "UNEXPECTED deviations present");
  return all_expected ? 0 : 1;
}
