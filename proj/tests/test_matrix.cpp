#include <doctest.h>

#include <random>

#include "cesaro/matrix.hpp"
#include "cesaro/numerics.hpp"

using namespace cesaro;

namespace {

RMat random_rmat(std::mt19937& rng, int rows, int cols, int mag = 5) {
  std::uniform_int_distribution<int> num(-mag, mag);
  std::uniform_int_distribution<int> den(1, 4);
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      m(i, j) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("identity and arithmetic basics") {
  RMat id = RMat::identity(3);
  std::mt19937 rng(7);
  RMat m = random_rmat(rng, 3, 3);
  CHECK(id * m == m);
  CHECK(m * id == m);
  CHECK(m - m == RMat(3, 3));
  CHECK((m + m) == m * Rational(2));
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("exact elimination: inverse, rank, nullspace, solve") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + trial % 4;
    RMat m = random_rmat(rng, d, d);
    if (rank(m) < d) {
      // Singular draws must be refused by inverse and have a nullspace.
      CHECK_THROWS_AS(inverse(m), Error);
      RMat ns = nullspace(m);
      CHECK(ns.cols() == d - rank(m));
      for (int j = 0; j < ns.cols(); ++j) {
        RMat prod = m * ns.col(j);
        for (int i = 0; i < d; ++i) CHECK(prod(i, 0) == Rational(0));
      }
      continue;
    }
    RMat inv = inverse(m);
    CHECK(m * inv == RMat::identity(d));
    CHECK(inv * m == RMat::identity(d));
    RMat b = random_rmat(rng, d, 2);
    RMat x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);
  }
}

TEST_CASE("rank-nullity on rectangular matrices") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + trial % 3, cols = 2 + (trial / 3) % 4;
    RMat m = random_rmat(rng, rows, cols);
    RMat ns = nullspace(m);
    CHECK(rank(m) + ns.cols() == cols);
  }
}

TEST_CASE("induced norms: exact agrees with numeric, submultiplicative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + trial % 4;
    RMat x = random_rmat(rng, d, d);
    RMat y = random_rmat(rng, d, d);
    for (NormKind kind : {NormKind::One, NormKind::Inf}) {
      Rational exact = induced_norm_exact(x, kind);
      CHECK(induced_norm(x, kind) == doctest::Approx(exact.get_d()));
    }
    for (NormKind kind : {NormKind::One, NormKind::Inf, NormKind::Two}) {
      double nx = induced_norm(x, kind);
      double ny = induced_norm(y, kind);
      double nxy = induced_norm(x * y, kind);
      CHECK(nxy <= nx * ny * (1 + 1e-12) + 1e-12);
      // Spectral radius is dominated by every induced norm.
      CHECK(spectral_radius(x) <= nx * (1 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("one-norm is the max absolute column sum") {
  RMat m(2, 2, {Rational(1), Rational(-3), Rational(2), Rational(4)});
  CHECK(induced_norm_exact(m, NormKind::One) == Rational(7));
  CHECK(induced_norm_exact(m, NormKind::Inf) == Rational(6));
}

TEST_CASE("lie bracket: antisymmetry and Jacobi identity") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 2 + trial % 3;
    RMat x = random_rmat(rng, d, d);
    RMat y = random_rmat(rng, d, d);
    RMat z = random_rmat(rng, d, d);
    CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
    RMat jacobi = lie_bracket(x, lie_bracket(y, z)) +
                  lie_bracket(y, lie_bracket(z, x)) +
                  lie_bracket(z, lie_bracket(x, y));
    CHECK(jacobi == RMat(d, d));
  }
}

TEST_CASE("span tracker: add, contains, coordinates") {
  std::mt19937 rng(23);
  RSpan span(4);
  std::vector<std::vector<Rational>> inserted;
  while (span.size() < 3) {
    RMat v = random_rmat(rng, 4, 1);
    if (span.add(flatten(v))) inserted.push_back(flatten(v));
  }
  CHECK(span.size() == 3);
  // A combination of inserted vectors lies inside and yields coordinates.
  std::vector<Rational> combo(4, Rational(0));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 4; ++i)
      combo[i] += Rational(k + 1) * inserted[k][i];
  REQUIRE(span.contains(combo));
  std::vector<Rational> coeffs;
  REQUIRE(span.coordinates(combo, coeffs));
  REQUIRE(coeffs.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(coeffs[k] == Rational(k + 1));
  CHECK_FALSE(span.add(combo));
}

TEST_CASE("complex solve and nullspace with tolerances") {
  CMat a(2, 2, {Complex(2, 0), Complex(0, 1), Complex(0, 0), Complex(1, 0)});
  CMat b(2, 1, {Complex(1, 1), Complex(3, 0)});
  CMat x = solve(a, b);
  CMat r = a * x - b;
  CHECK(frobenius(r) <= 1e-10);
  CMat singular(2, 2, {Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0)});
  CHECK(rank(singular) == 1);
  CMat ns = nullspace(singular);
  CHECK(ns.cols() == 1);
  CHECK(frobenius(singular * ns) <= 1e-10);
}
