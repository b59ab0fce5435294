#include "cesaro/fixtures.hpp"

#include <cmath>

namespace cesaro {
namespace fixtures {
namespace {

RMat rmat(int rows, int cols, std::initializer_list<Rational> entries) {
  RMat m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();  // mpq_class(n, d) does not reduce on its own
  return q;
}

Rational half() { return frac(1, 2); }

}  // namespace

RRep sum_of_digits() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 2;
  rep.name = "sum_of_digits";
  rep.L = rmat(1, 2, {0, 1});
  rep.A = {RMat::identity(2), rmat(2, 2, {1, 0, 1, 1})};
  rep.C = rmat(2, 1, {1, 0});
  return rep;
}

RRep thue_morse() {
  Substitution sub;
  sub.radix = 2;
  sub.sigma = {{0, 1}, {1, 0}};
  sub.output = {Rational(1), Rational(-1)};
  sub.start = 0;
  RRep rep = substitution_to_linrep(sub);
  rep.name = "thue_morse";
  return rep;
}

RRep rudin_shapiro() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 2;
  rep.name = "rudin_shapiro";
  rep.L = rmat(1, 2, {1, 1});
  rep.A = {rmat(2, 2, {1, 1, 0, 0}), rmat(2, 2, {0, 0, 1, -1})};
  rep.C = rmat(2, 1, {1, 0});
  rep.eigen_hints = {Complex(std::sqrt(2.0)), Complex(-std::sqrt(2.0))};
  return rep;
}

RRep rudin_shapiro4() {
  RRep rep = radix_power(rudin_shapiro(), 2);
  rep.name = "rudin_shapiro4";
  rep.eigen_hints = {Complex(2.0), Complex(-2.0)};
  return rep;
}

RRep multiples_of_3() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 3;
  rep.name = "multiples_of_3";
  rep.L = rmat(1, 3, {1, 0, 0});
  rep.A = {rmat(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0}),
           rmat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})};
  rep.C = rmat(3, 1, {1, 0, 0});
  return rep;
}

RRep mergesort() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 4;
  rep.name = "mergesort";
  rep.L = rmat(1, 4, {0, 0, 0, 1});
  rep.A = {rmat(4, 4, {0, -1, -1, -1,  //
                       1, 2, 1, 1,     //
                       0, 0, 1, 0,     //
                       0, 0, 0, 1}),
           rmat(4, 4, {0, 0, 1, 1,     //
                       0, 0, -1, -1,   //
                       1, 0, -1, -2,   //
                       0, 1, 2, 3})};
  rep.C = rmat(4, 1, {1, 0, 0, 0});
  return rep;
}

RRep billingsley(const Rational& p0) {
  RRep rep;
  rep.radix = 2;
  rep.dim = 1;
  rep.name = "billingsley";
  rep.L = rmat(1, 1, {1});
  rep.A = {rmat(1, 1, {p0}), rmat(1, 1, {Rational(1) - p0})};
  rep.C = rmat(1, 1, {1});
  return rep;
}

RRep powers_of_2() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 2;
  rep.name = "powers_of_2";
  rep.L = rmat(1, 2, {0, 1});
  rep.A = {RMat::identity(2), rmat(2, 2, {0, 0, 1, 0})};
  rep.C = rmat(2, 1, {1, 0});
  return rep;
}

RRep lipmaa_wallen() {
  RRep rep;
  rep.radix = 8;
  rep.dim = 8;
  rep.name = "lipmaa_wallen";
  static const int base[8][8] = {
      {4, 0, 0, 1, 0, 1, 1, 0},  //
      {0, 0, 0, 1, 0, 1, 0, 0},  //
      {0, 0, 0, 1, 0, 0, 1, 0},  //
      {0, 0, 0, 1, 0, 0, 0, 0},  //
      {0, 0, 0, 0, 0, 1, 1, 0},  //
      {0, 0, 0, 0, 0, 1, 0, 0},  //
      {0, 0, 0, 0, 0, 0, 1, 0},  //
      {0, 0, 0, 0, 0, 0, 0, 0},
  };
  rep.A.clear();
  for (int r = 0; r < 8; ++r) {
    RMat a(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        a(i, j) = frac(base[i ^ r][j ^ r], 4);
    rep.A.push_back(a);
  }
  RMat L(1, 8);
  for (int j = 0; j < 8; ++j) L(0, j) = 1;
  rep.L = L;
  RMat C(8, 1);
  C(0, 0) = 1;
  rep.C = C;
  return rep;
}

RRep vdc_discrepancy() {
  RRep rep;
  rep.radix = 2;
  rep.dim = 3;
  rep.name = "vdc_discrepancy";
  rep.L = rmat(1, 3, {0, 1, 1});
  rep.A = {rmat(3, 3, {1, half(), 0,  //
                       0, half(), 0,  //
                       0, half(), 1}),
           rmat(3, 3, {half(), 0, 0,  //
                       half(), 1, 0,  //
                       half(), 0, 1})};
  rep.C = rmat(3, 1, {1, 0, 0});
  return rep;
}

RRep coquet() {
  RRep rep;
  rep.radix = 4;
  rep.dim = 3;
  rep.name = "coquet";
  rep.L = rmat(1, 3, {1, 1, 1});
  rep.A = {rmat(3, 3, {1, 1, 1, 0, 0, 0, 0, 0, 0}),
           rmat(3, 3, {1, 0, 0, 0, 1, -1, 0, 0, 0}),
           rmat(3, 3, {0, 0, 0, 1, 1, 0, 0, 0, 1}),
           rmat(3, 3, {0, 0, 0, 0, 0, 0, 1, -1, 1})};
  rep.C = rmat(3, 1, {1, 0, 0});
  return rep;
}

RRep rescaled_identity(int radix) {
  RRep rep;
  rep.radix = radix;
  rep.dim = 2;
  rep.name = "rescaled_identity";
  rep.L = rmat(1, 2, {0, 1});
  Rational invB = frac(1, radix);
  rep.A.clear();
  for (int r = 0; r < radix; ++r)
    rep.A.push_back(rmat(2, 2, {1, 0, frac(r, radix), invB}));
  rep.C = rmat(2, 1, {1, 0});
  return rep;
}

RRep identity_sequence(int radix) {
  RRep rep;
  rep.radix = radix;
  rep.dim = 2;
  rep.name = "identity";
  rep.L = rmat(1, 2, {0, 1});
  rep.A.clear();
  for (int r = 0; r < radix; ++r)
    rep.A.push_back(rmat(2, 2, {Rational(radix), 0, Rational(r), 1}));
  rep.C = rmat(2, 1, {1, 0});
  return rep;
}

CRep triangular_tiling() {
  CRep rep;
  rep.radix = 2;
  rep.dim = 2;
  rep.name = "triangular_tiling";
  rep.L = CMat::row_vec({Complex(1), Complex(0)});
  double c = 0.5, s = std::sqrt(3.0) / 2;
  CMat neg(2, 2), pos(2, 2);
  neg(0, 0) = c;
  neg(0, 1) = s;
  neg(1, 0) = -s;
  neg(1, 1) = c;
  pos(0, 0) = c;
  pos(0, 1) = -s;
  pos(1, 0) = s;
  pos(1, 1) = c;
  rep.A = {neg, pos};
  rep.C = CMat::col_vec({Complex(1), Complex(0)});
  rep.eigen_hints = {Complex(1.0)};
  return rep;
}

std::vector<RRep> rational_corpus() {
  return {sum_of_digits(),
          thue_morse(),
          rudin_shapiro(),
          rudin_shapiro4(),
          multiples_of_3(),
          mergesort(),
          billingsley(frac(1, 4)),
          billingsley(frac(1, 5)),
          powers_of_2(),
          lipmaa_wallen(),
          vdc_discrepancy(),
          coquet(),
          rescaled_identity(2),
          identity_sequence(2)};
}

}  // namespace fixtures
}  // namespace cesaro
