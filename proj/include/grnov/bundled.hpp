#ifndef GRNOV_BUNDLED_HPP
#define GRNOV_BUNDLED_HPP

#include "grnov/domination.hpp"
#include "grnov/contraction.hpp"

namespace grnov {

// The worked objects every suite keeps coming back to: the Laurent ring, a
// two-dimensional twisted Laurent ring (K x K with the swap automorphism), the
// quotient ring K[A,B,C,D]/(AB+CD-1) with deg A = deg C = 1 and
// deg B = deg D = -1, the two-step complex over it, and the complex
// [R --(t-2)--> R] over the Laurent ring.

RingPtr bundled_laurent(const Field& f);
RingPtr bundled_twisted(const Field& f);
RingPtr bundled_abcd(const Field& f);

FreeComplex bundled_paper_complex(const Field& f);
FreeComplex bundled_tminus2(const Field& f);

// geometric-series certificates for the two-step complex: the plus direction
// inverts 1-A through sum A^j, the minus direction inverts 1-B
Certificate bundled_paper_certificate(const RingPtr& abcd, Certificate::Direction dir, long truncation);

// evaluation-at-2 Mather data for [R --(t-2)--> R]: D = [Q] in degree 0,
// alpha evaluates t at 2, beta includes constants, H divides by t-2
DominationData bundled_evaluation_domination(const Field& f, int wlo, int whi);

// identity Mather data on a slot window: D is the windowed slot complex of C,
// alpha = beta = id, H = 0
DominationData bundled_identity_domination(const FreeComplex& c, int wlo, int whi);

}  // namespace grnov

#endif
