#include "grnov/complex.hpp"

#include <stdexcept>

namespace grnov {

GsMatrix gs_zero_matrix(const RingPtr& ring, int rows, int cols) {
    return GsMatrix(rows, cols, GradedScalar::zero(ring));
}

GsMatrix gs_identity_matrix(const RingPtr& ring, int n) {
    GsMatrix m = gs_zero_matrix(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GradedScalar::one(ring);
    return m;
}

GsMatrix gs_mat_mul(const RingPtr& ring, const GsMatrix& a, const GsMatrix& b) {
    return mat_mul(a, b, GradedScalar::zero(ring));
}

GsMatrix gs_mat_reversed(const RingPtr& reversed_ring, const GsMatrix& m) {
    GsMatrix r = gs_zero_matrix(reversed_ring, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).reversed(reversed_ring);
    return r;
}

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<int> ranks, std::vector<GsMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("FreeComplex: need one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
            throw std::invalid_argument("FreeComplex: differential shape mismatch at index " +
                                        std::to_string(lo_ + static_cast<int>(i) + 1));
    }
}

int FreeComplex::rank_at(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return ranks_[static_cast<std::size_t>(n - lo_)];
}

GsMatrix FreeComplex::diff_at(int n) const {
    if (n <= lo_ || n > hi()) return gs_zero_matrix(ring_, rank_at(n - 1), rank_at(n));
    return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
}

FreeComplex FreeComplex::reversed() const {
    RingPtr rr = ring_->reversed();
    std::vector<GsMatrix> ds;
    ds.reserve(diffs_.size());
    for (const auto& d : diffs_) ds.push_back(gs_mat_reversed(rr, d));
    return FreeComplex(rr, lo_, ranks_, std::move(ds));
}

FreeComplex FreeComplex::shifted(int by) const { return FreeComplex(ring_, lo_ + by, ranks_, diffs_); }

VerifyResult validate_complex(const FreeComplex& c) {
    for (int n = c.lo() + 2; n <= c.hi(); ++n) {
        GsMatrix comp = gs_mat_mul(c.ring(), c.diff_at(n - 1), c.diff_at(n));
        for (int i = 0; i < comp.rows(); ++i)
            for (int j = 0; j < comp.cols(); ++j)
                if (!comp.at(i, j).is_zero())
                    return {false, "d.d != 0 at index " + std::to_string(n) + ", entry (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ") = " + comp.at(i, j).to_string()};
    }
    return {true, ""};
}

std::map<int, GsMatrix> homogeneous_split(const RingPtr& ring, const GsMatrix& m) {
    std::map<int, GsMatrix> out;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [d, h] : m.at(i, j).components()) {
                auto it = out.find(d);
                if (it == out.end())
                    it = out.emplace(d, gs_zero_matrix(ring, m.rows(), m.cols())).first;
                it->second.at(i, j) = GradedScalar::from_homog(ring, h);
            }
    return out;
}

std::optional<std::pair<int, int>> degree_range(const GsMatrix& m) {
    std::optional<std::pair<int, int>> out;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto s = m.at(i, j).degree_span();
            if (!s) continue;
            if (!out)
                out = s;
            else
                out = std::make_pair(std::min(out->first, s->first), std::max(out->second, s->second));
        }
    return out;
}

const std::vector<R0Summand> R0Complex::empty_level_{};

R0Complex::R0Complex(RingPtr ring, int lo, std::vector<std::vector<R0Summand>> levels,
                     std::vector<GsMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), levels_(std::move(levels)), diffs_(std::move(diffs)) {
    if (!levels_.empty() && diffs_.size() + 1 != levels_.size())
        throw std::invalid_argument("R0Complex: need one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != static_cast<int>(levels_[i].size()) ||
            diffs_[i].cols() != static_cast<int>(levels_[i + 1].size()))
            throw std::invalid_argument("R0Complex: differential shape mismatch");
    }
}

const std::vector<R0Summand>& R0Complex::level(int n) const {
    if (n < lo_ || n > hi()) return empty_level_;
    return levels_[static_cast<std::size_t>(n - lo_)];
}

GsMatrix R0Complex::diff_at(int n) const {
    if (n <= lo_ || n > hi())
        return gs_zero_matrix(ring_, static_cast<int>(level(n - 1).size()),
                              static_cast<int>(level(n).size()));
    return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
}

VerifyResult r0_validate(const R0Complex& c) {
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        const auto& src = c.level(n);
        const auto& dst = c.level(n - 1);
        GsMatrix d = c.diff_at(n);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) {
                auto span = d.at(i, j).degree_span();
                if (!span) continue;
                int want = dst[i].degree - src[j].degree;
                if (span->first != want || span->second != want)
                    return {false, "block (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") at index " + std::to_string(n) + " is not homogeneous of degree " +
                                       std::to_string(want)};
            }
    }
    for (int n = c.lo() + 2; n <= c.hi(); ++n) {
        GsMatrix comp = gs_mat_mul(c.ring(), c.diff_at(n - 1), c.diff_at(n));
        for (int i = 0; i < comp.rows(); ++i)
            for (int j = 0; j < comp.cols(); ++j)
                if (!comp.at(i, j).is_zero())
                    return {false, "d.d != 0 at index " + std::to_string(n)};
    }
    return {true, ""};
}

int scalar_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        Scalar inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar c = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - c * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {
// K-matrix of a block differential of an R0Complex level pair
std::vector<std::vector<Scalar>> expand_blocks(const R0Complex& c, int n) {
    const auto& ring = *c.ring();
    std::size_t d = ring.component_dim();
    const auto& src = c.level(n);
    const auto& dst = c.level(n - 1);
    GsMatrix blocks = c.diff_at(n);
    std::vector<std::vector<Scalar>> m(dst.size() * d,
                                       std::vector<Scalar>(src.size() * d, Scalar::zero(ring.field())));
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            const GradedScalar& b = blocks.at(static_cast<int>(i), static_cast<int>(j));
            if (b.is_zero()) continue;
            Homog h = b.components().begin()->second;
            auto k = ring.left_mul_matrix(h, src[j].degree);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) m[i * d + r][j * d + s] = k[r][s];
        }
    return m;
}
}  // namespace

std::map<int, long> r0_betti(const R0Complex& c) {
    if (!c.ring()->component_finite())
        throw std::invalid_argument("r0_betti: ring has infinite-dimensional components");
    std::map<int, long> betti;
    if (c.empty()) return betti;
    std::size_t d = c.ring()->component_dim();
    std::map<int, int> ranks;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) ranks[n] = scalar_rank(expand_blocks(c, n));
    for (int n = c.lo(); n <= c.hi(); ++n) {
        long dim = static_cast<long>(c.level(n).size() * d);
        long rn = ranks.count(n) ? ranks[n] : 0;
        long rn1 = ranks.count(n + 1) ? ranks[n + 1] : 0;
        betti[n] = dim - rn - rn1;
    }
    return betti;
}

}  // namespace grnov
