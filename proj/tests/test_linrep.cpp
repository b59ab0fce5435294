#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "cesaro/fixtures.hpp"
#include "cesaro/linrep.hpp"

using namespace cesaro;

namespace {

// Independent pattern oracle: number of (overlapping) 11 factors in binary n.
int count_11(int64_t n) {
  int c = 0;
  while (n >= 3) {
    if ((n & 3) == 3) ++c;
    n >>= 1;
  }
  return c;
}

int ceil_log2(int64_t n) {
  int k = 0;
  while ((int64_t(1) << k) < n) ++k;
  return k;
}

}  // namespace

TEST_CASE("digit words round-trip") {
  for (int radix : {2, 3, 8, 10}) {
    for (int64_t n = 0; n < 200; ++n) {
      DigitWord w = digit_word(n, radix);
      CHECK(word_value(w, radix) == n);
      if (n > 0) CHECK(w.front() != 0);  // canonical: no leading zero
    }
  }
  CHECK(digit_word(0, 2).empty());
}

TEST_CASE("fixture terms match independent oracles") {
  RRep sd = fixtures::sum_of_digits();
  RRep tm = fixtures::thue_morse();
  RRep rs = fixtures::rudin_shapiro();
  RRep rs4 = fixtures::rudin_shapiro4();
  RRep m3 = fixtures::multiples_of_3();
  RRep ms = fixtures::mergesort();
  RRep p2 = fixtures::powers_of_2();
  RRep cq = fixtures::coquet();
  RRep id3 = fixtures::identity_sequence(3);
  for (int64_t n = 0; n < 2048; ++n) {
    int s = std::popcount(static_cast<uint64_t>(n));
    CHECK(eval_term(sd, n) == Rational(s));
    CHECK(eval_term(tm, n) == Rational(s % 2 == 0 ? 1 : -1));
    Rational rs_expect(count_11(n) % 2 == 0 ? 1 : -1);
    CHECK(eval_term(rs, n) == rs_expect);
    CHECK(eval_term(rs4, n) == rs_expect);
    CHECK(eval_term(m3, n) == Rational(n % 3 == 0 ? 1 : 0));
    CHECK(eval_term(ms, n) == Rational(n == 0 ? 0 : ceil_log2(n)));
    CHECK(eval_term(p2, n) == Rational((n & (n - 1)) == 0 && n > 0 ? 1 : 0));
    int s3 = std::popcount(static_cast<uint64_t>(3 * n));
    CHECK(eval_term(cq, n) == Rational(s3 % 2 == 0 ? 1 : -1));
    CHECK(eval_term(id3, n) == Rational(static_cast<long>(n)));
  }
}

TEST_CASE("validate rejects malformed representations") {
  RRep rep = fixtures::sum_of_digits();
  CHECK_NOTHROW(validate(rep));
  RRep bad = rep;
  bad.radix = 1;
  CHECK_THROWS_AS(validate(bad), Error);
  bad = rep;
  bad.A.pop_back();
  CHECK_THROWS_AS(validate(bad), Error);
  bad = rep;
  bad.L = RMat(1, 3);
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("word sums: digitwise equals naive, S_K(1) = Q^K C") {
  std::mt19937 rng(31);
  for (const RRep& rep : fixtures::rational_corpus()) {
    RMat qk = rep.C;
    for (int K = 0; K <= 6; ++K) {
      CHECK(running_sum_words(rep, K, Rational(1), SumMethod::Digitwise) == qk);
      std::uniform_int_distribution<int> num(0, 63);
      for (int trial = 0; trial < 4; ++trial) {
        Rational x(num(rng), 64);
        x.canonicalize();
        CHECK(running_sum_words(rep, K, x, SumMethod::Naive) ==
              running_sum_words(rep, K, x, SumMethod::Digitwise));
      }
      qk = rep.Q() * qk;
    }
  }
}

TEST_CASE("integer sums: brute equals decomposition") {
  std::mt19937 rng(37);
  for (const RRep& rep : fixtures::rational_corpus()) {
    for (int64_t N : {int64_t(0), int64_t(1), int64_t(2), int64_t(7)}) {
      CHECK(running_sum_integers(rep, N, IntegerSumMethod::Brute) ==
            running_sum_integers(rep, N, IntegerSumMethod::Decomposition));
    }
    std::uniform_int_distribution<int64_t> big(8, 3000);
    for (int trial = 0; trial < 5; ++trial) {
      int64_t N = big(rng);
      CHECK(running_sum_integers(rep, N, IntegerSumMethod::Brute) ==
            running_sum_integers(rep, N, IntegerSumMethod::Decomposition));
    }
  }
}

TEST_CASE("running-sum accumulator matches the one-shot paths") {
  RRep rep = fixtures::vdc_discrepancy();
  RunningSumAccumulator<Rational> acc(rep);
  CHECK(acc.total() == running_sum_integers(rep, 0, IntegerSumMethod::Brute));
  for (int64_t N = 1; N <= 256; ++N) {
    acc.advance();
    CHECK(acc.current_index() == N);
    CHECK(acc.total() == running_sum_integers(rep, N, IntegerSumMethod::Brute));
  }
}

TEST_CASE("radix_power preserves evaluations") {
  for (RRep rep : {fixtures::sum_of_digits(), fixtures::rudin_shapiro(),
                   fixtures::vdc_discrepancy()}) {
    REQUIRE(is_insensitive(rep));
    RRep squared = radix_power(rep, 2);
    CHECK(squared.radix == rep.radix * rep.radix);
    for (int64_t n = 0; n < 1024; ++n)
      CHECK(eval_term(squared, n) == eval_term(rep, n));
  }
}

TEST_CASE("reduce preserves evaluations and never grows the dimension") {
  for (const RRep& rep : fixtures::rational_corpus()) {
    RRep red = reduce(rep);
    CHECK(red.dim <= rep.dim);
    for (int64_t n = 0; n < 512; ++n)
      CHECK(eval_term(red, n) == eval_term(rep, n));
  }
}

TEST_CASE("substitution import reproduces Thue-Morse") {
  Substitution sub;
  sub.radix = 2;
  sub.sigma = {{0, 1}, {1, 0}};
  sub.output = {Rational(1), Rational(-1)};
  sub.start = 0;
  RRep rep = substitution_to_linrep(sub);
  RRep tm = fixtures::thue_morse();
  for (int64_t n = 0; n < 1024; ++n)
    CHECK(eval_term(rep, n) == eval_term(tm, n));
}

TEST_CASE("representation inference recovers known sequences") {
  auto popcount_oracle = [](int64_t n) {
    return Rational(std::popcount(static_cast<uint64_t>(n)));
  };
  RRep guessed = infer_representation(2, popcount_oracle);
  for (int64_t n = 0; n < 4096; ++n)
    CHECK(eval_term(guessed, n) == popcount_oracle(n));

  auto constant_oracle = [](int64_t) { return Rational(3); };
  RRep constant = infer_representation(2, constant_oracle);
  CHECK(constant.dim == 1);
  for (int64_t n = 0; n < 256; ++n)
    CHECK(eval_term(constant, n) == Rational(3));
}
