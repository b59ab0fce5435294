#include "cesaro/linrep.hpp"

#include <algorithm>
#include <map>

namespace cesaro {

DigitWord digit_word(int64_t n, int radix) {
  if (n < 0) throw Error(ErrorKind::Structural, "negative index");
  DigitWord w;
  while (n > 0) {
    w.push_back(static_cast<int>(n % radix));
    n /= radix;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int64_t word_value(const DigitWord& w, int radix) {
  int64_t v = 0;
  for (int d : w) v = v * radix + d;
  return v;
}

bool is_insensitive(const RRep& rep) { return rep.L * rep.A[0] == rep.L; }

bool is_insensitive(const CRep& rep, double tol) {
  CMat diff = rep.L * rep.A[0] - rep.L;
  double scale = std::max(1.0, rep.L.max_abs());
  return diff.max_abs() <= tol * scale;
}

namespace {

constexpr int64_t kNaiveBudget = int64_t(1) << 20;

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// First radix digit of x in [0,1): d = floor(B x); replaces x by Bx - d.
int pop_digit(Rational& x, int radix) {
  x *= radix;
  mpz_class d;
  mpz_fdiv_q(d.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  x -= Rational(d);
  return static_cast<int>(d.get_si());
}

template <class T>
Mat<T> naive_sum(const LinearRep<T>& rep, int K, const Rational& x) {
  if (K > 62 || ipow(rep.radix, std::min(K, 62)) > kNaiveBudget)
    throw Error(ErrorKind::Budget, "naive word enumeration budget exceeded");
  // Threshold: (0.w)_B <= x  <=>  (w)_B <= x * B^K.
  Rational bound = x * Rational(ipow(rep.radix, K));
  Mat<T> total(rep.dim, 1);
  // DFS over words with prefix products.
  std::function<void(int, int64_t, const Mat<T>&)> rec =
      [&](int level, int64_t value, const Mat<T>& prefix) {
        if (level == K) {
          if (Rational(static_cast<long>(value)) <= bound)
            total = total + prefix * rep.C;
          return;
        }
        for (int r = 0; r < rep.radix; ++r)
          rec(level + 1, value * rep.radix + r, prefix * rep.A[r]);
      };
  rec(0, 0, Mat<T>::identity(rep.dim));
  return total;
}

template <class T>
Mat<T> digitwise_sum(const LinearRep<T>& rep, int K, Rational x) {
  // Precompute Q^k C for k = 0..K.
  Mat<T> q = rep.Q();
  std::vector<Mat<T>> qkc(K + 1);
  qkc[0] = rep.C;
  for (int k = 1; k <= K; ++k) qkc[k] = q * qkc[k - 1];

  std::function<Mat<T>(int, Rational)> rec = [&](int k, Rational y) -> Mat<T> {
    if (k == 0) return rep.C;
    if (y >= 1) return qkc[k];
    Rational rest = y;
    int d = pop_digit(rest, rep.radix);
    Mat<T> s(rep.dim, 1);
    for (int r = 0; r < d; ++r) s = s + rep.A[r] * qkc[k - 1];
    return s + rep.A[d] * rec(k - 1, rest);
  };
  return rec(K, std::move(x));
}

}  // namespace

template <class T>
Mat<T> running_sum_words(const LinearRep<T>& rep, int K, const Rational& x,
                         SumMethod method) {
  validate(rep);
  if (K < 0 || x < 0 || x > 1)
    throw Error(ErrorKind::Structural,
                "running_sum_words requires K >= 0 and x in [0, 1]");
  return method == SumMethod::Naive ? naive_sum(rep, K, x)
                                    : digitwise_sum(rep, K, x);
}

template <class T>
void RunningSumAccumulator<T>::advance() {
  ++n_;
  DigitWord w = digit_word(n_, rep_->radix);
  // Longest common prefix with the previous canonical word.
  size_t keep = 0;
  if (w.size() == digits_.size()) {
    while (keep < w.size() && w[keep] == digits_[keep]) ++keep;
  }
  prefix_.resize(keep);
  for (size_t j = keep; j < w.size(); ++j) {
    Mat<T> next = j == 0 ? rep_->A[w[j]] : prefix_[j - 1] * rep_->A[w[j]];
    prefix_.push_back(std::move(next));
  }
  digits_ = std::move(w);
  total_ = total_ + prefix_.back() * rep_->C;
}

template <class T>
Mat<T> running_sum_integers(const LinearRep<T>& rep, int64_t N,
                            IntegerSumMethod method) {
  validate(rep);
  if (N < 0) throw Error(ErrorKind::Structural, "negative index");
  if (N == 0) return rep.C;
  if (method == IntegerSumMethod::Brute) {
    RunningSumAccumulator<T> acc(rep);
    while (acc.current_index() < N) acc.advance();
    return acc.total();
  }
  DigitWord w = digit_word(N, rep.radix);
  int K = static_cast<int>(w.size()) - 1;  // B^K <= N < B^{K+1}
  Mat<T> q = rep.Q();
  Mat<T> sum_q = rep.C;  // sum_{k=0..K} Q^k C
  Mat<T> qkc = rep.C;
  for (int k = 1; k <= K; ++k) {
    qkc = q * qkc;
    sum_q = sum_q + qkc;
  }
  Rational x(static_cast<long>(N));
  x /= Rational(static_cast<long>(ipow(rep.radix, K + 1)));
  Mat<T> tail = running_sum_words(rep, K + 1, x, SumMethod::Digitwise);
  return (Mat<T>::identity(rep.dim) - rep.A[0]) * sum_q + tail;
}

template <class T>
LinearRep<T> radix_power(const LinearRep<T>& rep, int T_power) {
  validate(rep);
  if (T_power < 1 || T_power > 4)
    throw Error(ErrorKind::Structural, "radix power must be between 1 and 4");
  int64_t big = ipow(rep.radix, T_power);
  if (big > 4096)
    throw Error(ErrorKind::Budget, "radix power target is too large");
  LinearRep<T> out;
  out.radix = static_cast<int>(big);
  out.dim = rep.dim;
  out.L = rep.L;
  out.C = rep.C;
  out.name = rep.name.empty()
                 ? ""
                 : rep.name + "_radix" + std::to_string(out.radix);
  out.A.resize(out.radix);
  for (int s = 0; s < out.radix; ++s) {
    // T-digit base-B word of s, with leading zeros, most significant first.
    Mat<T> prod = Mat<T>::identity(rep.dim);
    for (int pos = T_power - 1; pos >= 0; --pos) {
      int digit = static_cast<int>((s / ipow(rep.radix, pos)) % rep.radix);
      prod = prod * rep.A[digit];
    }
    out.A[s] = prod;
  }
  return out;
}

namespace {

RRep trivial_zero_rep(int radix) {
  RRep rep;
  rep.radix = radix;
  rep.dim = 1;
  rep.L = RMat(1, 1);
  rep.C = RMat(1, 1);
  rep.A.assign(radix, RMat::identity(1));
  return rep;
}

}  // namespace

RRep reduce(const RRep& rep) {
  validate(rep);
  // Forward (column) closure: span of { A_w C }.
  RSpan fwd(rep.dim);
  if (!fwd.add(flatten(rep.C))) return trivial_zero_rep(rep.radix);
  for (size_t head = 0; head < fwd.raw_basis().size(); ++head) {
    RMat v(rep.dim, 1);
    for (int i = 0; i < rep.dim; ++i) v(i, 0) = fwd.raw_basis()[head][i];
    for (int r = 0; r < rep.radix; ++r) fwd.add(flatten(rep.A[r] * v));
  }
  int m = fwd.size();
  RMat F(rep.dim, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < rep.dim; ++i) F(i, k) = fwd.raw_basis()[k][i];
  RRep mid;
  mid.radix = rep.radix;
  mid.dim = m;
  mid.name = rep.name;
  mid.C = RMat(m, 1);
  mid.C(0, 0) = Rational(1);  // C is the first forward basis vector
  mid.L = rep.L * F;
  mid.A.resize(rep.radix);
  for (int r = 0; r < rep.radix; ++r) {
    mid.A[r] = RMat(m, m);
    for (int k = 0; k < m; ++k) {
      RMat img = rep.A[r] * F.col(k);
      std::vector<Rational> coords;
      if (!fwd.coordinates(flatten(img), coords))
        throw Error(ErrorKind::Structural, "forward closure is not closed");
      for (int i = 0; i < m; ++i) mid.A[r](i, k) = coords[i];
    }
  }

  // Backward (row) closure on the restricted rep: span of { L' A'_w }.
  RSpan bwd(m);
  if (!bwd.add(flatten(mid.L))) return trivial_zero_rep(rep.radix);
  for (size_t head = 0; head < bwd.raw_basis().size(); ++head) {
    RMat g(1, m);
    for (int j = 0; j < m; ++j) g(0, j) = bwd.raw_basis()[head][j];
    for (int r = 0; r < rep.radix; ++r) bwd.add(flatten(g * mid.A[r]));
  }
  int p = bwd.size();
  RMat G(p, m);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = bwd.raw_basis()[i][j];
  RRep out;
  out.radix = rep.radix;
  out.dim = p;
  out.name = rep.name;
  out.L = RMat(1, p);
  out.L(0, 0) = Rational(1);  // L is the first backward basis row
  out.C = G * mid.C;
  out.A.resize(rep.radix);
  for (int r = 0; r < rep.radix; ++r) {
    out.A[r] = RMat(p, p);
    for (int i = 0; i < p; ++i) {
      RMat img = G.row(i) * mid.A[r];
      std::vector<Rational> coords;
      if (!bwd.coordinates(flatten(img), coords))
        throw Error(ErrorKind::Structural, "backward closure is not closed");
      for (int k = 0; k < p; ++k) out.A[r](i, k) = coords[k];
    }
  }
  return out;
}

RRep infer_representation(int radix,
                          const std::function<Rational(int64_t)>& oracle,
                          const InferOptions& opts) {
  if (radix < 2) throw Error(ErrorKind::Structural, "radix must be at least 2");
  const int64_t H = opts.check_horizon;
  if (H < 16) throw Error(ErrorKind::Structural, "check horizon too small");
  int max_level = opts.max_level;
  if (max_level < 0) {
    // Deepest level whose digit images still have >= 8 evaluable entries.
    max_level = 0;
    while (ipow(radix, max_level + 2) * 8 <= H) ++max_level;
  }
  int64_t window = H / ipow(radix, max_level + 1);
  if (window < 2)
    throw Error(ErrorKind::Structural, "check horizon too small for level budget");

  auto value_vector = [&](int k, int64_t s) {
    std::vector<Rational> v(static_cast<size_t>(window));
    int64_t step = ipow(radix, k);
    for (int64_t j = 0; j < window; ++j) v[j] = oracle(step * j + s);
    return v;
  };

  RSpan span(static_cast<int>(window));
  std::vector<std::pair<int, int64_t>> basis;  // (level, offset)
  for (int k = 0; k <= max_level; ++k) {
    for (int64_t s = 0; s < ipow(radix, k); ++s)
      if (span.add(value_vector(k, s))) basis.emplace_back(k, s);
  }
  int d = span.size();
  if (d == 0) {
    RRep rep = trivial_zero_rep(radix);
    for (int64_t n = 0; n < H; ++n)
      if (sgn(oracle(n)) != 0)
        throw Error(ErrorKind::Structural,
                    "sequence not recognized within horizon");
    return rep;
  }

  RRep rep;
  rep.radix = radix;
  rep.dim = d;
  rep.L = RMat(1, d);
  rep.C = RMat(d, 1);
  rep.A.assign(radix, RMat(d, d));
  for (int ell = 0; ell < d; ++ell) {
    auto [k, s] = basis[ell];
    rep.L(0, ell) = oracle(s);  // v^ell(0) = u(B^k * 0 + s)
    for (int r = 0; r < radix; ++r) {
      // Digit image: n -> v^ell(B n + r) = u(B^{k+1} n + r B^k + s).
      std::vector<Rational> coords;
      if (!span.coordinates(value_vector(k + 1, r * ipow(radix, k) + s),
                            coords))
        throw Error(ErrorKind::Structural,
                    "state space still growing at the level budget");
      for (int i = 0; i < d; ++i) rep.A[r](i, ell) = coords[i];
    }
  }
  {
    std::vector<Rational> coords;
    if (!span.coordinates(value_vector(0, 0), coords))
      throw Error(ErrorKind::Structural, "sequence escapes its own span");
    for (int i = 0; i < d; ++i) rep.C(i, 0) = coords[i];
  }

  for (int64_t n = 0; n < H; ++n)
    if (eval_term(rep, n) != oracle(n))
      throw Error(ErrorKind::Structural,
                  "inferred representation fails verification on the horizon");
  return rep;
}

RRep substitution_to_linrep(const Substitution& sub) {
  int m = static_cast<int>(sub.sigma.size());
  if (sub.radix < 2 || m < 1 ||
      static_cast<int>(sub.output.size()) != m || sub.start < 0 ||
      sub.start >= m)
    throw Error(ErrorKind::Structural, "malformed substitution");
  for (const auto& word : sub.sigma) {
    if (static_cast<int>(word.size()) != sub.radix)
      throw Error(ErrorKind::Structural,
                  "substitution must have constant length equal to the radix");
    for (int letter : word)
      if (letter < 0 || letter >= m)
        throw Error(ErrorKind::Structural, "substitution letter out of range");
  }
  if (sub.sigma[sub.start][0] != sub.start)
    throw Error(ErrorKind::Structural,
                "start letter must be a fixed first letter of its image");
  RRep rep;
  rep.radix = sub.radix;
  rep.dim = m;
  rep.L = RMat(1, m);
  rep.L(0, sub.start) = Rational(1);
  rep.C = RMat(m, 1);
  for (int x = 0; x < m; ++x) rep.C(x, 0) = sub.output[x];
  rep.A.assign(sub.radix, RMat(m, m));
  for (int r = 0; r < sub.radix; ++r)
    for (int x = 0; x < m; ++x) rep.A[r](x, sub.sigma[x][r]) = Rational(1);
  return rep;
}

// Explicit instantiations for the two supported scalar domains.
template Mat<Rational> running_sum_words(const RRep&, int, const Rational&,
                                         SumMethod);
template Mat<Complex> running_sum_words(const CRep&, int, const Rational&,
                                        SumMethod);
template Mat<Rational> running_sum_integers(const RRep&, int64_t,
                                            IntegerSumMethod);
template Mat<Complex> running_sum_integers(const CRep&, int64_t,
                                           IntegerSumMethod);
template LinearRep<Rational> radix_power(const RRep&, int);
template LinearRep<Complex> radix_power(const CRep&, int);
template class RunningSumAccumulator<Rational>;
template class RunningSumAccumulator<Complex>;

}  // namespace cesaro
