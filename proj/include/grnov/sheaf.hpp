#ifndef GRNOV_SHEAF_HPP
#define GRNOV_SHEAF_HPP

#include "grnov/complex.hpp"

namespace grnov {

// Chain complex of twisting pre-sheaves O(q_n, p_n): the base complex together
// with one window (q, p) per chain index such that every differential route
// maps [-p_n, q_n] into [-p_{n-1}, q_{n-1}] and q_n + p_n >= 0 throughout.
struct SheafComplex {
    FreeComplex base;
    std::vector<std::pair<int, int>> windows;  // (q_n, p_n), parallel to base levels
    std::pair<int, int> window_at(int n) const;
};

VerifyResult sheaf_validate(const SheafComplex& s);

// Window extension starting from (0,0) at the top index; the growth rule clips
// differential degree ranges at zero so windows never shrink.
SheafComplex extend_to_sheaf(const FreeComplex& c);

// H^0 of the complex of sheaves: chain module at n is the in-window part
// (+)_{k=-p_n}^{q_n} R_k^{rank_n}, with the homogeneous pieces of the
// differential routed from source degree k to target degree k + piece degree.
R0Complex h0_witness(const SheafComplex& s);

// The three splitting operators of the cohomology computation for O(q,p),
// p + q >= 0. The pair type carries (minus part: support <= q, plus part:
// support >= -p).
struct WindowPair {
    GradedScalar minus_part;
    GradedScalar plus_part;
};

void window_check_supports(int q, int p, const WindowPair& x);
WindowPair window_delta(int q, int p, const GradedScalar& r);        // r supported in [-p, q]
GradedScalar window_rho(int q, int p, const WindowPair& x);          // (r, s) -> sum_{-p..q} s_l
WindowPair window_sigma(int q, int p, const GradedScalar& r);        // the displayed splitting
GradedScalar window_iota(int q, int p, const WindowPair& x);         // -iota_q + iota_p

// Element of t^{-p} R[t] ox_{R[t]} R[t,t^-1] in the coordinates of the chosen
// partition of type (-p, p): the vector (w_j) stands for sum_j u_j ox w_j.
class PlusTensor {
  public:
    PlusTensor(RingPtr ring, int p);
    static PlusTensor pure(const RingPtr& ring, int p, const GradedScalar& r, const GradedScalar& s);
    static PlusTensor from_coords(const RingPtr& ring, int p, std::vector<GradedScalar> w);
    const RingPtr& ring() const { return ring_; }
    int p() const { return p_; }
    const std::vector<GradedScalar>& coords() const { return w_; }
    void add_pure(const GradedScalar& r, const GradedScalar& s);  // r supported >= -p
    bool operator==(const PlusTensor& o) const;

  private:
    RingPtr ring_;
    int p_ = 0;
    std::vector<GradedScalar> w_;
};

GradedScalar adjoint_alpha(const PlusTensor& x);                       // r ox s -> r s
PlusTensor adjoint_beta(const RingPtr& ring, int p, const GradedScalar& r);

// Mirror side: t^q R[t^-1] ox_{R[t^-1]} R[t,t^-1] in coordinates of the
// partition of type (q, -q).
class MinusTensor {
  public:
    MinusTensor(RingPtr ring, int q);
    static MinusTensor pure(const RingPtr& ring, int q, const GradedScalar& r, const GradedScalar& s);
    static MinusTensor from_coords(const RingPtr& ring, int q, std::vector<GradedScalar> w);
    const RingPtr& ring() const { return ring_; }
    int q() const { return q_; }
    const std::vector<GradedScalar>& coords() const { return w_; }
    void add_pure(const GradedScalar& r, const GradedScalar& s);  // r supported <= q
    bool operator==(const MinusTensor& o) const;

  private:
    RingPtr ring_;
    int q_ = 0;
    std::vector<GradedScalar> w_;
};

GradedScalar adjoint_gamma(const MinusTensor& x);
MinusTensor adjoint_beta_gamma(const RingPtr& ring, int q, const GradedScalar& r);

// Diagram of complexes N^- -> N <- N^+ with levelwise structure maps.
struct DiagramOfComplexes {
    FreeComplex minus, middle, plus;
    std::vector<GsMatrix> g_minus;  // per middle level index: N^-_n -> N_n
    std::vector<GsMatrix> g_plus;   // per middle level index: N^+_n -> N_n
    GsMatrix g_minus_at(int n) const;
    GsMatrix g_plus_at(int n) const;
};

VerifyResult diagram_validate(const DiagramOfComplexes& d);

// Totalisation of the levelwise two-column cohomology complex: level n is
// N^-_n (+) N^+_n (+) N_{n+1}, with differential induced by -g^-, g^+, the
// side differentials and the negated middle differential.
FreeComplex hypercohomology_tot(const DiagramOfComplexes& d);

}  // namespace grnov

#endif
