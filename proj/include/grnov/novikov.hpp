#ifndef GRNOV_NOVIKOV_HPP
#define GRNOV_NOVIKOV_HPP

#include <map>

#include "grnov/complex.hpp"

namespace grnov {

// Degree bounds with saturating sentinels.
constexpr long kNovNegInf = -(1L << 40);
constexpr long kNovPosInf = (1L << 40);

long nov_sat_add(long a, long b);

// Windowed element of the Novikov ring R((t)) (series infinite upward, finite
// tail downward): no components below lo at all; components in [lo, hi] are
// stored exactly; everything above hi is unknown (truncated). The minus
// direction is obtained by reversing the grading, never duplicated here.
class TruncNov {
  public:
    TruncNov() = default;
    explicit TruncNov(RingPtr ring);  // exact zero
    static TruncNov zero(const RingPtr& ring) { return TruncNov(ring); }
    static TruncNov from_graded(const GradedScalar& g);  // exact polynomial
    static TruncNov from_components(const RingPtr& ring, long lo, long hi, std::map<int, Homog> comps);

    const RingPtr& ring() const { return ring_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }  // exactness bound
    const std::map<int, Homog>& components() const { return comps_; }
    bool is_exact_zero() const { return comps_.empty() && hi_ >= kNovPosInf; }
    bool is_zero_up_to(long t) const;
    Homog component(int degree) const;

    TruncNov truncated(long hi) const;
    TruncNov operator-() const;
    friend TruncNov operator+(const TruncNov& a, const TruncNov& b);
    friend TruncNov operator-(const TruncNov& a, const TruncNov& b);
    friend TruncNov operator*(const TruncNov& a, const TruncNov& b);
    TruncNov scaled(const Scalar& c) const;

    // equality of the stored windows on the overlap of exactness; exact equality
    // when both are exact polynomials
    bool operator==(const TruncNov& o) const;

    TruncNov reversed(const RingPtr& reversed_ring) const;
    std::string to_string() const;

  private:
    RingPtr ring_;
    long lo_ = kNovPosInf;
    long hi_ = kNovPosInf;
    std::map<int, Homog> comps_;
    void prune();
};

using NovMatrix = Matrix<TruncNov>;

NovMatrix nov_zero_matrix(const RingPtr& ring, int rows, int cols);
NovMatrix nov_identity_matrix(const RingPtr& ring, int n);
NovMatrix nov_from_gs(const GsMatrix& m);
NovMatrix nov_mat_mul(const RingPtr& ring, const NovMatrix& a, const NovMatrix& b);
NovMatrix nov_mat_truncated(const NovMatrix& m, long hi);
NovMatrix nov_mat_reversed(const RingPtr& reversed_ring, const NovMatrix& m);

// Splittings of 0 -> R[t] -> R[t,t^-1] (+) R[[t]] -> R((t)) -> 0. The middle
// is a pair (Laurent part, series part with support >= 0).
struct SeriesMiddle {
    GradedScalar laurent;
    TruncNov series;
};

SeriesMiddle series_delta(const GradedScalar& r);   // r supported in degrees >= 0
TruncNov series_rho(const SeriesMiddle& x);         // (r, s) -> s - r
GradedScalar series_kappa(const SeriesMiddle& x);   // nonnegative part of the Laurent entry
SeriesMiddle series_lambda(const TruncNov& x);      // (-negative part, nonnegative part)

}  // namespace grnov

#endif
