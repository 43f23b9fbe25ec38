#ifndef GRNOV_DOMINATION_HPP
#define GRNOV_DOMINATION_HPP

#include "grnov/induced.hpp"
#include "grnov/novikov.hpp"

namespace grnov {

// Slot coordinates for C_n viewed as an R_0-module (+)_{i,k} e_i R_k,
// restricted to left degrees in [wlo, whi]. Basis order: generator outer,
// degree inner, matching window_basis in the induced-module code.
struct SlotSpace {
    int ngens = 0;
    int wlo = 0;
    int whi = 0;
    int width() const { return whi - wlo + 1; }
    int size() const { return ngens * width(); }
    int index(int gen, int k) const {
        if (k < wlo || k > whi || gen < 0 || gen >= ngens) return -1;
        return gen * width() + (k - wlo);
    }
    SlotKey key(int idx) const { return SlotKey{idx / width(), wlo + idx % width()}; }
};

// R_0-linear maps between windowed slot spaces and the summand spaces of D.
// Blocks are homogeneous elements acting by left multiplication:
//   alpha[n](s, (i,k))   in R_{deg(s) - k}
//   beta[n]((i,k), s)    in R_{k - deg(s)}
//   homotopy[n]((i',k'),(i,k)) in R_{k'-k},  H : C_n -> C_{n+1}
//   d_homotopy[n](s', s) in R_{deg(s')-deg(s)},  G : D_n -> D_{n+1}
// The declared window is the range of source slot degrees on which alpha and
// homotopy are complete; beta and d_homotopy are complete as given.
struct DominationData {
    FreeComplex C;
    R0Complex D;
    int wlo = 0, whi = 0;
    std::map<int, GsMatrix> alpha;
    std::map<int, GsMatrix> beta;
    std::map<int, GsMatrix> homotopy;
    std::map<int, GsMatrix> d_homotopy;  // empty: require alpha.beta == id_D exactly

    SlotSpace slot_space(int n) const;
    GsMatrix alpha_at(int n) const;
    GsMatrix beta_at(int n) const;
    GsMatrix homotopy_at(int n) const;
    GsMatrix d_homotopy_at(int n) const;
    bool strict_retract() const { return d_homotopy.empty(); }
    DominationData reversed() const;
};

// Matrix between slot/summand bases together with per-source-column validity
// (windowed data is only trustworthy where no route left the window).
struct WinMat {
    GsMatrix m;
    std::vector<bool> valid;
};
WinMat win_full(GsMatrix m);
WinMat win_compose(const RingPtr& ring, const WinMat& a, const WinMat& b);
WinMat win_add(const RingPtr& ring, const WinMat& a, const WinMat& b);
WinMat win_neg(const WinMat& a);

// induced differential of C on window slots; columns whose routes leave the
// window are zeroed and marked invalid
WinMat slot_diff(const DominationData& d, int n);
// mu = id - down-shift on slots of C_n; the bottom-degree columns are invalid
WinMat slot_mu(const DominationData& d, int n);

// chain-map, homotopy, and retraction identities on all columns whose routes
// stay inside the window
VerifyResult domination_validate(const DominationData& d);

struct NuData {
    int lo = 0;                   // D level range covered
    std::vector<GsMatrix> e;      // (alpha beta ox id) per level
    std::vector<GsMatrix> zeta;   // the degree-raising part, per level
    std::vector<GsMatrix> nu;     // e - zeta
    GsMatrix e_at(int n, const DominationData& d) const;
    GsMatrix zeta_at(int n, const DominationData& d) const;
    GsMatrix nu_at(int n, const DominationData& d) const;
};

// nu = (alpha ox id) . mu . (beta ox id) in summand coordinates; zeta is the
// independent composite through the down-shift so nu = e - zeta by definition
NuData nu_build(const DominationData& d);

// J = (alpha ox id) . mu . (H ox id) : (C ox R)_n -> (D ox R)_{n+1}
WinMat mather_j(const DominationData& d, const NuData& nu, int n);

// homotopy square residual dJ + Jd - (nu (alpha ox id) - (alpha ox id) mu),
// zero on valid columns
WinMat mather_square_residual(const DominationData& d, const NuData& nu, int n);

// Bicomplex E_{n,m} = (D_{n+m-1} ox R_{-n}) (+) (D_{n+m} ox R_{-n}) realized
// on a window of the series index n; cell differentials are summand matrices.
struct Bicomplex {
    const DominationData* data = nullptr;
    NuData nus;
    int nlo = 0, nhi = 0;
    GsMatrix dh(int n, int m) const;  // E_{n,m} -> E_{n-1,m}
    GsMatrix dv(int n, int m) const;  // E_{n,m} -> E_{n,m-1}
    int cell_rows(int n, int m) const;
};
Bicomplex bicomplex_build(const DominationData& d, int nlo, int nhi);
VerifyResult bicomplex_check(const Bicomplex& e);

// (summand, series-degree) expansion of a summand matrix: the piece of degree
// h routes (s, n) -> (s', n - (h - deg s' + deg s)). Used to compare the
// assembled totalisation with cone(nu) entrywise.
struct TotLevel {
    // basis: (side 0 = D_{l-1}, side 1 = D_l) x summand x series index n
    std::vector<std::tuple<int, int, int>> basis;
};

struct TotComparison {
    bool equal = false;
    std::string message;
};

// assemble tot(E) on the window through the (-1)^n identification and compare
// against the expansion of cone(nu), entry by entry
TotComparison tot_vs_cone(const Bicomplex& e, int level_lo, int level_hi);

// right truncated totalisation against cone(nu) tensored with the Novikov
// ring, both realized as truncated-series matrices on the window
TotComparison totrt_vs_cone_novikov(const Bicomplex& e, int level_lo, int level_hi, long truncation);

// Twisted truncated powers: reindex a generator-coordinate series into
// per-degree layers (Phi_M direction) and back, and the two evaluation routes
// of a module map under the identification.
std::vector<std::map<int, Homog>> tpow_layers(const std::vector<TruncNov>& x);
std::vector<TruncNov> tpow_unlayers(const RingPtr& ring, int ngens,
                                    const std::vector<std::map<int, Homog>>& layers, long lo, long hi);
// f ox id_Nov evaluated by series multiplication
std::vector<TruncNov> tpow_map_series(const RingPtr& ring, const GsMatrix& f,
                                      const std::vector<TruncNov>& x);
// the same map evaluated layerwise through Phi
std::vector<TruncNov> tpow_map_layers(const RingPtr& ring, const GsMatrix& f,
                                      const std::vector<TruncNov>& x);

}  // namespace grnov

#endif
