#ifndef GRNOV_CONTRACTION_HPP
#define GRNOV_CONTRACTION_HPP

#include <optional>

#include "grnov/domination.hpp"

namespace grnov {

// Machine-checkable meaning of trivial Novikov homology: degree-truncated
// matrices s_n with d s + s d = id on all components of degree <= truncation.
// A minus-direction certificate carries its maps in the same plus convention
// but stated over the grading-reversed ring (components >= -truncation of the
// original grading).
struct Certificate {
    enum class Direction { plus, minus };
    Direction direction = Direction::plus;
    long truncation = 0;
    int lo = 0;  // chain index of maps.front(); maps[i] : C_{lo+i} -> C_{lo+i+1}
    std::vector<NovMatrix> maps;

    NovMatrix map_at(int n, const FreeComplex& c) const;
};

// d s + s d = id exactly on all components of degree <= truncation (after
// reversal for the minus direction); reports the first violation or an
// insufficient entry window
VerifyResult contraction_verify(const FreeComplex& c, const Certificate& cert);

// Build a certificate from Mather data: column contractions of cone(alpha.beta
// ox id) from the D-side homotopy, assembled through the staircase sum over
// the horizontal differential, and transported to C ox Nov along the explicit
// polynomial-level comparison maps.
Certificate contraction_from_domination(const DominationData& data, Certificate::Direction dir,
                                        long truncation);

// Order-by-order solve of the K-linear system d s + s d = id on the degree
// window [window_lo, truncation + slack]; gated to component-finite rings.
// nullopt means not-found at this window, which is explicitly inconclusive.
std::optional<Certificate> contraction_search(const FreeComplex& c, Certificate::Direction dir,
                                              long truncation, int window_lo);

int contraction_default_window_lo(const FreeComplex& c, long truncation);

}  // namespace grnov

#endif
