#ifndef GRNOV_COMPLEX_HPP
#define GRNOV_COMPLEX_HPP

#include <map>
#include <optional>

#include "grnov/matrix.hpp"
#include "grnov/ring.hpp"

namespace grnov {

using GsMatrix = Matrix<GradedScalar>;

GsMatrix gs_zero_matrix(const RingPtr& ring, int rows, int cols);
GsMatrix gs_identity_matrix(const RingPtr& ring, int n);
GsMatrix gs_mat_mul(const RingPtr& ring, const GsMatrix& a, const GsMatrix& b);
GsMatrix gs_mat_reversed(const RingPtr& reversed_ring, const GsMatrix& m);

// Bounded chain complex of finitely generated free modules, as differential
// matrices acting on column vectors: diff(n) maps C_n to C_{n-1}.
class FreeComplex {
  public:
    FreeComplex() = default;
    // ranks[i] is the rank at chain index lo+i; diffs[i] is the differential
    // leaving index lo+i+1 (so diffs.size() == ranks.size()-1 when nonempty)
    FreeComplex(RingPtr ring, int lo, std::vector<int> ranks, std::vector<GsMatrix> diffs);

    const RingPtr& ring() const { return ring_; }
    bool empty() const { return ranks_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return ranks_.empty() ? lo_ - 1 : lo_ + static_cast<int>(ranks_.size()) - 1; }
    int rank_at(int n) const;
    const std::vector<int>& ranks() const { return ranks_; }
    // d_n : C_n -> C_{n-1}; zero-shaped matrix outside the support
    GsMatrix diff_at(int n) const;

    FreeComplex reversed() const;  // over ring()->reversed()
    FreeComplex shifted(int by) const;

  private:
    RingPtr ring_;
    int lo_ = 0;
    std::vector<int> ranks_;
    std::vector<GsMatrix> diffs_;
};

// d(n-1) . d(n) == 0 entrywise, exactly
VerifyResult validate_complex(const FreeComplex& c);

// split of a matrix into homogeneous pieces: sum over degrees recovers the input
std::map<int, GsMatrix> homogeneous_split(const RingPtr& ring, const GsMatrix& m);
std::optional<std::pair<int, int>> degree_range(const GsMatrix& m);

// Complex of finite direct sums of homogeneous components R_k; differentials
// are matrices whose (s', s) block is a homogeneous element of degree
// deg(s') - deg(s), acting by left multiplication.
struct R0Summand {
    int gen = 0;  // generator label in the originating complex (diagnostic)
    int degree = 0;
};

class R0Complex {
  public:
    R0Complex() = default;
    R0Complex(RingPtr ring, int lo, std::vector<std::vector<R0Summand>> levels,
              std::vector<GsMatrix> diffs);

    const RingPtr& ring() const { return ring_; }
    bool empty() const { return levels_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return levels_.empty() ? lo_ - 1 : lo_ + static_cast<int>(levels_.size()) - 1; }
    const std::vector<R0Summand>& level(int n) const;
    GsMatrix diff_at(int n) const;
    std::vector<std::vector<R0Summand>> const& levels() const { return levels_; }

  private:
    RingPtr ring_;
    int lo_ = 0;
    std::vector<std::vector<R0Summand>> levels_;
    std::vector<GsMatrix> diffs_;
    static const std::vector<R0Summand> empty_level_;
};

// d^2 == 0 plus block-degree consistency
VerifyResult r0_validate(const R0Complex& c);

// exact Betti numbers over K per chain index; requires a component-finite ring
std::map<int, long> r0_betti(const R0Complex& c);

// rank over K of a Scalar matrix (Gaussian elimination)
int scalar_rank(std::vector<std::vector<Scalar>> m);

}  // namespace grnov

#endif
