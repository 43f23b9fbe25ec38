#ifndef GRNOV_INDUCED_HPP
#define GRNOV_INDUCED_HPP

#include <map>

#include "grnov/complex.hpp"

namespace grnov {

// Slot of the canonical form of M tensor_{R_0} R[t,t^-1] for M free over the
// ring: (generator index, left degree). The slot (i,k) with value w stands for
// sum_j e_i u_j ox v_j w over any partition of unity of type (k,-k); a pure
// tensor e_i a ox r with a homogeneous of degree k lands in slot (i,k) with
// value a*r. Well-definedness is the multiplication isomorphism for strongly
// graded rings.
struct SlotKey {
    int gen = 0;
    int k = 0;
    auto operator<=>(const SlotKey&) const = default;
};

class Induced {
  public:
    Induced() = default;
    explicit Induced(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const std::map<SlotKey, GradedScalar>& slots() const { return slots_; }
    bool is_zero() const { return slots_.empty(); }
    GradedScalar slot(const SlotKey& s) const;

    void add_slot(const SlotKey& s, const GradedScalar& w);
    // canonical insertion of the pure tensor e_gen * a ox r
    void add_pure(int gen, const Homog& a, const GradedScalar& r);

    Induced operator-() const;
    friend Induced operator+(const Induced& a, const Induced& b);
    friend Induced operator-(const Induced& a, const Induced& b);
    Induced acted(const GradedScalar& r) const;  // right action
    Induced scaled(const Scalar& c) const;

    bool operator==(const Induced& o) const;
    std::string to_string() const;

  private:
    RingPtr ring_;
    std::map<SlotKey, GradedScalar> slots_;
};

// m ox r for a module element m given by generator coordinates
Induced induce(const RingPtr& ring, const std::vector<GradedScalar>& m, const GradedScalar& r);

// mu(c ox r) = c ox r - sum_j c x_j ox y_j r over the chosen (-1,1) partition,
// evaluated through the canonical form (definitional route)
Induced mu_apply(const Induced& x);
// the same map via an explicit partition of type (-1,1)
Induced mu_apply_with(const Induced& x, const Partition& pou_minus);
// slot-level reduction of mu: identity minus the left-degree down-shift
Induced mu_shift_form(const Induced& x);

// pi(m ox r) = m*r in generator coordinates
std::vector<GradedScalar> pi_apply(const Induced& x, int ngens);
// iota(m) = m ox 1
Induced iota_apply(const RingPtr& ring, const std::vector<GradedScalar>& m);
// tau: the three-case splitting of the canonical resolution, built from
// partitions of unity of all types (definitional route)
Induced tau_apply(const Induced& x);

// (M ox id): matrix action through the left factor; routes slot (i,k) to
// (i', k+h) with multiplier the degree-h piece of M(i',i)
Induced induced_matrix_apply(const GsMatrix& m, const Induced& x);

// Windowed realization of a complex whose level-n module carries a slot basis;
// entries of the differential are ring elements acting by left multiplication.
struct SlotComplex {
    FreeComplex cx;
    std::vector<std::vector<SlotKey>> bases;  // parallel to cx levels
    int basis_index(int level, const SlotKey& s) const;
};

// C ox_{R_0} R[t,t^-1] realized on per-level slot windows that widen downward
// so every route stays inside (no clipping); windows.first applies at the top
// nonzero index.
SlotComplex induced_complex(const FreeComplex& c, int win_lo, int win_hi);

// Algebraic torus T(C) = cone(mu) on a slot window, with the projection
// (x,y) -> pi(y) to C; homology of the result equals the homology of C for
// every window, which the Laurent oracle can check.
struct TorusResult {
    SlotComplex torus;
    std::vector<GsMatrix> projection;  // per level: T(C)_n -> C_n
};
TorusResult torus(const FreeComplex& c, int win_lo, int win_hi);

// Gaussian elimination of unit entries (c*t^k over Laurent); returns a smaller
// complex with the same homology.
FreeComplex simplify_complex(const FreeComplex& c);

}  // namespace grnov

#endif
