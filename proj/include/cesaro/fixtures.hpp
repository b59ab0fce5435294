#pragma once

#include "cesaro/linrep.hpp"

namespace cesaro {
namespace fixtures {

// Classical radix-rational sequences used throughout the test corpus.
RRep sum_of_digits();      ///< s_2(n), radix 2
RRep thue_morse();         ///< (-1)^{s_2(n)}, via the 01/10 substitution
RRep rudin_shapiro();      ///< (-1)^{#occurrences of 11}, radix 2
RRep rudin_shapiro4();     ///< the same sequence in radix 4
RRep multiples_of_3();     ///< indicator of 3 | n, radix 2
RRep mergesort();          ///< ceil(log2 n) (0 at n = 0), radix 2
RRep billingsley(const Rational& p0);  ///< dim-1 distribution rep
RRep powers_of_2();        ///< indicator of n being a power of 2
RRep lipmaa_wallen();      ///< additive differential probability, radix 8
RRep vdc_discrepancy();    ///< van der Corput discrepancy, radix 2
RRep coquet();             ///< (-1)^{s_2(3n)}, radix 4
RRep rescaled_identity(int radix);  ///< n / B^{len_B(n)}, rescaled u(n)=n
RRep identity_sequence(int radix);  ///< u(n) = n
CRep triangular_tiling();  ///< rotations by ±pi/3, radix 2

/// All exact rational fixtures, for sweep-style property tests.
std::vector<RRep> rational_corpus();

}  // namespace fixtures
}  // namespace cesaro
