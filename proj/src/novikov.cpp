#include "grnov/novikov.hpp"

#include <stdexcept>

namespace grnov {

long nov_sat_add(long a, long b) {
    if (a >= kNovPosInf || b >= kNovPosInf) return kNovPosInf;
    if (a <= kNovNegInf || b <= kNovNegInf) return kNovNegInf;
    long s = a + b;
    if (s >= kNovPosInf) return kNovPosInf;
    if (s <= kNovNegInf) return kNovNegInf;
    return s;
}

namespace {
long sat_add(long a, long b) { return nov_sat_add(a, b); }
}  // namespace

TruncNov::TruncNov(RingPtr ring) : ring_(std::move(ring)) {}

void TruncNov::prune() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        if (it->first > hi_ || it->first < lo_ || ring_->h_is_zero(it->second))
            it = comps_.erase(it);
        else
            ++it;
    }
}

TruncNov TruncNov::from_graded(const GradedScalar& g) {
    TruncNov t(g.ring());
    auto span = g.degree_span();
    if (!span) return t;  // exact zero
    t.lo_ = span->first;
    t.hi_ = kNovPosInf;
    for (const auto& [d, h] : g.components()) t.comps_.emplace(d, h);
    return t;
}

TruncNov TruncNov::from_components(const RingPtr& ring, long lo, long hi, std::map<int, Homog> comps) {
    TruncNov t(ring);
    t.lo_ = lo;
    t.hi_ = hi;
    t.comps_ = std::move(comps);
    t.prune();
    return t;
}

bool TruncNov::is_zero_up_to(long t) const {
    if (hi_ < t) return false;  // not exact that far; caller must check hi() first
    for (const auto& [d, h] : comps_)
        if (d <= t && !ring_->h_is_zero(h)) return false;
    return true;
}

Homog TruncNov::component(int degree) const {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    return ring_->h_zero(degree);
}

TruncNov TruncNov::truncated(long hi) const {
    TruncNov t = *this;
    t.hi_ = std::min(t.hi_, hi);
    t.prune();
    return t;
}

TruncNov TruncNov::operator-() const {
    TruncNov t = *this;
    for (auto& [d, h] : t.comps_) h = ring_->h_neg(h);
    return t;
}

TruncNov operator+(const TruncNov& a, const TruncNov& b) {
    TruncNov t(a.ring_ ? a.ring_ : b.ring_);
    t.lo_ = std::min(a.lo_, b.lo_);
    t.hi_ = std::min(a.hi_, b.hi_);
    t.comps_ = a.comps_;
    for (const auto& [d, h] : b.comps_) {
        auto it = t.comps_.find(d);
        if (it == t.comps_.end())
            t.comps_.emplace(d, h);
        else
            it->second = t.ring_->h_add(it->second, h);
    }
    t.prune();
    return t;
}

TruncNov operator-(const TruncNov& a, const TruncNov& b) { return a + (-b); }

TruncNov operator*(const TruncNov& a, const TruncNov& b) {
    TruncNov t(a.ring_ ? a.ring_ : b.ring_);
    t.lo_ = sat_add(a.lo_, b.lo_);
    t.hi_ = std::min(sat_add(a.hi_, b.lo_), sat_add(b.hi_, a.lo_));
    for (const auto& [da, ha] : a.comps_)
        for (const auto& [db, hb] : b.comps_) {
            if (static_cast<long>(da) + db > t.hi_) continue;
            Homog prod = t.ring_->h_mul(ha, hb);
            auto it = t.comps_.find(da + db);
            if (it == t.comps_.end())
                t.comps_.emplace(da + db, prod);
            else
                it->second = t.ring_->h_add(it->second, prod);
        }
    t.prune();
    return t;
}

TruncNov TruncNov::scaled(const Scalar& c) const {
    TruncNov t = *this;
    for (auto& [d, h] : t.comps_) h = ring_->h_scale(h, c);
    t.prune();
    return t;
}

bool TruncNov::operator==(const TruncNov& o) const {
    long bound = std::min(hi_, o.hi_);
    for (const auto& [d, h] : comps_) {
        if (d > bound) continue;
        if (!ring_->h_eq(h, o.component(d))) return false;
    }
    for (const auto& [d, h] : o.comps_) {
        if (d > bound) continue;
        if (!ring_->h_eq(h, component(d))) return false;
    }
    return true;
}

TruncNov TruncNov::reversed(const RingPtr& reversed_ring) const {
    TruncNov t(reversed_ring);
    t.lo_ = -hi_;
    t.hi_ = -lo_;
    for (const auto& [d, h] : comps_) t.comps_.emplace(-d, ring_->h_reversed(h));
    return t;
}

std::string TruncNov::to_string() const {
    std::string s = "{";
    for (const auto& [d, h] : comps_) {
        if (s.size() > 1) s += " + ";
        s += ring_->h_to_string(h);
    }
    s += "}[";
    s += (lo_ <= kNovNegInf ? "-inf" : std::to_string(lo_)) + ",";
    s += (hi_ >= kNovPosInf ? "inf" : std::to_string(hi_)) + "]";
    return s;
}

NovMatrix nov_zero_matrix(const RingPtr& ring, int rows, int cols) {
    return NovMatrix(rows, cols, TruncNov::zero(ring));
}

NovMatrix nov_identity_matrix(const RingPtr& ring, int n) {
    NovMatrix m = nov_zero_matrix(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = TruncNov::from_graded(GradedScalar::one(ring));
    return m;
}

NovMatrix nov_from_gs(const GsMatrix& m) {
    NovMatrix out(m.rows(), m.cols(), TruncNov());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = TruncNov::from_graded(m.at(i, j));
    return out;
}

NovMatrix nov_mat_mul(const RingPtr& ring, const NovMatrix& a, const NovMatrix& b) {
    return mat_mul(a, b, TruncNov::zero(ring));
}

NovMatrix nov_mat_truncated(const NovMatrix& m, long hi) {
    NovMatrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).truncated(hi);
    return out;
}

NovMatrix nov_mat_reversed(const RingPtr& reversed_ring, const NovMatrix& m) {
    NovMatrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).reversed(reversed_ring);
    return out;
}

SeriesMiddle series_delta(const GradedScalar& r) {
    auto span = r.degree_span();
    if (span && span->first < 0) throw std::invalid_argument("series_delta: input must lie in R[t]");
    return SeriesMiddle{r, TruncNov::from_graded(r)};
}

TruncNov series_rho(const SeriesMiddle& x) { return x.series - TruncNov::from_graded(x.laurent); }

GradedScalar series_kappa(const SeriesMiddle& x) {
    GradedScalar out(x.laurent.ring());
    for (const auto& [d, h] : x.laurent.components())
        if (d >= 0) out.add_component(h);
    return out;
}

SeriesMiddle series_lambda(const TruncNov& x) {
    const RingPtr& ring = x.ring();
    GradedScalar neg(ring);
    std::map<int, Homog> pos;
    for (const auto& [d, h] : x.components()) {
        if (d < 0)
            neg.add_component(h);
        else
            pos.emplace(d, h);
    }
    TruncNov series = TruncNov::from_components(ring, std::max(0L, x.lo()), x.hi(), std::move(pos));
    return SeriesMiddle{-neg, series};
}

}  // namespace grnov
