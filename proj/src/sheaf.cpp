#include "grnov/sheaf.hpp"

#include <stdexcept>

namespace grnov {

std::pair<int, int> SheafComplex::window_at(int n) const {
    if (n < base.lo() || n > base.hi()) return {0, 0};
    return windows[static_cast<std::size_t>(n - base.lo())];
}

VerifyResult sheaf_validate(const SheafComplex& s) {
    const FreeComplex& c = s.base;
    if (static_cast<int>(s.windows.size()) != (c.empty() ? 0 : c.hi() - c.lo() + 1))
        return {false, "window list does not match the complex support"};
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto [q, p] = s.window_at(n);
        if (q + p < 0)
            return {false, "window at index " + std::to_string(n) + " has q+p < 0"};
    }
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        auto [q, p] = s.window_at(n);
        auto [q1, p1] = s.window_at(n - 1);
        auto r = degree_range(c.diff_at(n));
        if (!r) continue;
        if (p1 < p - r->first || q1 < q + r->second)
            return {false, "differential at index " + std::to_string(n) +
                               " leaves the window of index " + std::to_string(n - 1)};
    }
    return {true, ""};
}

SheafComplex extend_to_sheaf(const FreeComplex& c) {
    auto ok = validate_complex(c);
    if (!ok.ok) throw std::invalid_argument("extend_to_sheaf: " + ok.message);
    SheafComplex s;
    s.base = c;
    if (c.empty()) return s;
    int len = c.hi() - c.lo() + 1;
    s.windows.assign(static_cast<std::size_t>(len), {0, 0});
    s.windows[static_cast<std::size_t>(len - 1)] = {0, 0};
    for (int n = c.hi(); n > c.lo(); --n) {
        auto [q, p] = s.windows[static_cast<std::size_t>(n - c.lo())];
        auto r = degree_range(c.diff_at(n));
        // window hull of the differential's degree support; windows may shift
        // when every piece moves in one direction, they never clip routes
        int a = r ? -r->first : 0;
        int b = r ? r->second : 0;
        int p1 = p + a;
        int q1 = std::max(q + b, -p1);
        s.windows[static_cast<std::size_t>(n - 1 - c.lo())] = {q1, p1};
    }
    auto check = sheaf_validate(s);
    if (!check.ok) throw std::logic_error("extend_to_sheaf: window rule failed: " + check.message);
    return s;
}

R0Complex h0_witness(const SheafComplex& s) {
    auto check = sheaf_validate(s);
    if (!check.ok) throw std::invalid_argument("h0_witness: " + check.message);
    const FreeComplex& c = s.base;
    const RingPtr& ring = c.ring();
    if (c.empty()) return R0Complex(ring, c.lo(), {}, {});

    std::vector<std::vector<R0Summand>> levels;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto [q, p] = s.window_at(n);
        std::vector<R0Summand> lvl;
        for (int i = 0; i < c.rank_at(n); ++i)
            for (int k = -p; k <= q; ++k) lvl.push_back(R0Summand{i, k});
        levels.push_back(std::move(lvl));
    }
    std::vector<GsMatrix> diffs;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        const auto& src = levels[static_cast<std::size_t>(n - c.lo())];
        const auto& dst = levels[static_cast<std::size_t>(n - 1 - c.lo())];
        std::map<std::pair<int, int>, int> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst_index[{dst[i].gen, dst[i].degree}] = static_cast<int>(i);
        GsMatrix d = c.diff_at(n);
        GsMatrix m = gs_zero_matrix(ring, static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            for (int i = 0; i < d.rows(); ++i) {
                for (const auto& [h, piece] : d.at(i, src[j].gen).components()) {
                    auto it = dst_index.find({i, src[j].degree + h});
                    if (it == dst_index.end())
                        throw std::invalid_argument(
                            "h0_witness: window violation at index " + std::to_string(n) + ", entry (" +
                            std::to_string(i) + "," + std::to_string(src[j].gen) + "), piece degree " +
                            std::to_string(h));
                    m.at(it->second, static_cast<int>(j)) =
                        m.at(it->second, static_cast<int>(j)) + GradedScalar::from_homog(ring, piece);
                }
            }
        }
        diffs.push_back(std::move(m));
    }
    return R0Complex(ring, c.lo(), std::move(levels), std::move(diffs));
}

namespace {
GradedScalar filter_components(const GradedScalar& g, int lo, int hi) {
    GradedScalar out(g.ring());
    for (const auto& [d, h] : g.components())
        if (d >= lo && d <= hi) out.add_component(h);
    return out;
}

void require_window(int q, int p) {
    if (q + p < 0)
        throw std::invalid_argument("splitting operators need q + p >= 0 (other cases not treated)");
}

constexpr int kInf = 1 << 28;
}  // namespace

void window_check_supports(int q, int p, const WindowPair& x) {
    auto sm = x.minus_part.degree_span();
    if (sm && sm->second > q)
        throw std::invalid_argument("minus part has components above degree q");
    auto sp = x.plus_part.degree_span();
    if (sp && sp->first < -p)
        throw std::invalid_argument("plus part has components below degree -p");
}

WindowPair window_delta(int q, int p, const GradedScalar& r) {
    require_window(q, p);
    auto s = r.degree_span();
    if (s && (s->first < -p || s->second > q))
        throw std::invalid_argument("delta: input not supported in [-p, q]");
    return WindowPair{r, r};
}

GradedScalar window_rho(int q, int p, const WindowPair& x) {
    require_window(q, p);
    window_check_supports(q, p, x);
    return filter_components(x.plus_part, -p, q);
}

WindowPair window_sigma(int q, int p, const GradedScalar& r) {
    require_window(q, p);
    return WindowPair{-filter_components(r, -kInf, q), filter_components(r, q + 1, kInf)};
}

GradedScalar window_iota(int q, int p, const WindowPair& x) {
    require_window(q, p);
    window_check_supports(q, p, x);
    return -x.minus_part + x.plus_part;
}

PlusTensor::PlusTensor(RingPtr ring, int p) : ring_(std::move(ring)), p_(p) {
    w_.assign(ring_->partition(-p_).pairs.size(), GradedScalar::zero(ring_));
}

void PlusTensor::add_pure(const GradedScalar& r, const GradedScalar& s) {
    auto span = r.degree_span();
    if (span && span->first < -p_)
        throw std::invalid_argument("PlusTensor: left factor below degree -p");
    const Partition& part = ring_->partition(-p_);
    for (std::size_t j = 0; j < part.pairs.size(); ++j) {
        // u_j ox (v_j r) s with v_j r in R[t]
        w_[j] = w_[j] + GradedScalar::from_homog(ring_, part.pairs[j].v) * r * s;
    }
}

PlusTensor PlusTensor::pure(const RingPtr& ring, int p, const GradedScalar& r, const GradedScalar& s) {
    PlusTensor t(ring, p);
    t.add_pure(r, s);
    return t;
}

bool PlusTensor::operator==(const PlusTensor& o) const {
    if (p_ != o.p_ || w_.size() != o.w_.size()) return false;
    for (std::size_t j = 0; j < w_.size(); ++j)
        if (!(w_[j] == o.w_[j])) return false;
    return true;
}

GradedScalar adjoint_alpha(const PlusTensor& x) {
    const RingPtr& ring = x.ring();
    const Partition& part = ring->partition(-x.p());
    GradedScalar out = GradedScalar::zero(ring);
    for (std::size_t j = 0; j < part.pairs.size(); ++j)
        out = out + GradedScalar::from_homog(ring, part.pairs[j].u) * x.coords()[j];
    return out;
}

PlusTensor PlusTensor::from_coords(const RingPtr& ring, int p, std::vector<GradedScalar> w) {
    PlusTensor t(ring, p);
    if (w.size() != t.w_.size()) throw std::invalid_argument("PlusTensor: coordinate count mismatch");
    t.w_ = std::move(w);
    return t;
}

PlusTensor adjoint_beta(const RingPtr& ring, int p, const GradedScalar& r) {
    const Partition& part = ring->partition(-p);
    std::vector<GradedScalar> w;
    for (std::size_t j = 0; j < part.pairs.size(); ++j)
        w.push_back(GradedScalar::from_homog(ring, part.pairs[j].v) * r);
    // beta(r) = sum_j u_j ox v_j r is already in coordinate form
    return PlusTensor::from_coords(ring, p, std::move(w));
}

MinusTensor::MinusTensor(RingPtr ring, int q) : ring_(std::move(ring)), q_(q) {
    w_.assign(ring_->partition(q_).pairs.size(), GradedScalar::zero(ring_));
}

void MinusTensor::add_pure(const GradedScalar& r, const GradedScalar& s) {
    auto span = r.degree_span();
    if (span && span->second > q_)
        throw std::invalid_argument("MinusTensor: left factor above degree q");
    const Partition& part = ring_->partition(q_);
    for (std::size_t j = 0; j < part.pairs.size(); ++j)
        w_[j] = w_[j] + GradedScalar::from_homog(ring_, part.pairs[j].v) * r * s;
}

MinusTensor MinusTensor::pure(const RingPtr& ring, int q, const GradedScalar& r, const GradedScalar& s) {
    MinusTensor t(ring, q);
    t.add_pure(r, s);
    return t;
}

bool MinusTensor::operator==(const MinusTensor& o) const {
    if (q_ != o.q_ || w_.size() != o.w_.size()) return false;
    for (std::size_t j = 0; j < w_.size(); ++j)
        if (!(w_[j] == o.w_[j])) return false;
    return true;
}

GradedScalar adjoint_gamma(const MinusTensor& x) {
    const RingPtr& ring = x.ring();
    const Partition& part = ring->partition(x.q());
    GradedScalar out = GradedScalar::zero(ring);
    for (std::size_t j = 0; j < part.pairs.size(); ++j)
        out = out + GradedScalar::from_homog(ring, part.pairs[j].u) * x.coords()[j];
    return out;
}

MinusTensor MinusTensor::from_coords(const RingPtr& ring, int q, std::vector<GradedScalar> w) {
    MinusTensor t(ring, q);
    if (w.size() != t.w_.size()) throw std::invalid_argument("MinusTensor: coordinate count mismatch");
    t.w_ = std::move(w);
    return t;
}

MinusTensor adjoint_beta_gamma(const RingPtr& ring, int q, const GradedScalar& r) {
    const Partition& part = ring->partition(q);
    std::vector<GradedScalar> w;
    for (std::size_t j = 0; j < part.pairs.size(); ++j)
        w.push_back(GradedScalar::from_homog(ring, part.pairs[j].v) * r);
    return MinusTensor::from_coords(ring, q, std::move(w));
}

GsMatrix DiagramOfComplexes::g_minus_at(int n) const {
    if (n < middle.lo() || n > middle.hi() || g_minus.empty())
        return gs_zero_matrix(middle.ring(), middle.rank_at(n), minus.rank_at(n));
    return g_minus[static_cast<std::size_t>(n - middle.lo())];
}

GsMatrix DiagramOfComplexes::g_plus_at(int n) const {
    if (n < middle.lo() || n > middle.hi() || g_plus.empty())
        return gs_zero_matrix(middle.ring(), middle.rank_at(n), plus.rank_at(n));
    return g_plus[static_cast<std::size_t>(n - middle.lo())];
}

VerifyResult diagram_validate(const DiagramOfComplexes& d) {
    for (const FreeComplex* c : {&d.minus, &d.middle, &d.plus}) {
        auto ok = validate_complex(*c);
        if (!ok.ok) return ok;
    }
    const RingPtr& ring = d.middle.ring();
    for (int n = d.middle.lo() + 1; n <= d.middle.hi(); ++n) {
        // structure maps must be chain maps: d_middle . g = g . d_side
        GsMatrix lhs = gs_mat_mul(ring, d.middle.diff_at(n), d.g_minus_at(n));
        GsMatrix rhs = gs_mat_mul(ring, d.g_minus_at(n - 1), d.minus.diff_at(n));
        if (!mat_eq(lhs, rhs)) return {false, "g_minus is not a chain map at index " + std::to_string(n)};
        lhs = gs_mat_mul(ring, d.middle.diff_at(n), d.g_plus_at(n));
        rhs = gs_mat_mul(ring, d.g_plus_at(n - 1), d.plus.diff_at(n));
        if (!mat_eq(lhs, rhs)) return {false, "g_plus is not a chain map at index " + std::to_string(n)};
    }
    return {true, ""};
}

FreeComplex hypercohomology_tot(const DiagramOfComplexes& d) {
    auto ok = diagram_validate(d);
    if (!ok.ok) throw std::invalid_argument("hypercohomology_tot: " + ok.message);
    const RingPtr& ring = d.middle.ring();
    int lo = std::min({d.minus.lo(), d.plus.lo(), d.middle.lo() - 1});
    int hi = std::max({d.minus.hi(), d.plus.hi(), d.middle.hi() - 1});
    if (lo > hi) return FreeComplex(ring, 0, {}, {});
    std::vector<int> ranks;
    for (int n = lo; n <= hi; ++n)
        ranks.push_back(d.minus.rank_at(n) + d.plus.rank_at(n) + d.middle.rank_at(n + 1));
    std::vector<GsMatrix> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        int rows = ranks[static_cast<std::size_t>(n - 1 - lo)];
        int cols = ranks[static_cast<std::size_t>(n - lo)];
        GsMatrix m = gs_zero_matrix(ring, rows, cols);
        auto put = [&](const GsMatrix& blk, int ro, int co) {
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j) m.at(ro + i, co + j) = blk.at(i, j);
        };
        int r0 = d.minus.rank_at(n - 1), r1 = d.plus.rank_at(n - 1);
        int c0 = d.minus.rank_at(n), c1 = d.plus.rank_at(n);
        put(d.minus.diff_at(n), 0, 0);
        put(d.plus.diff_at(n), r0, c0);
        put(mat_neg(d.g_minus_at(n)), r0 + r1, 0);
        put(d.g_plus_at(n), r0 + r1, c0);
        put(mat_neg(d.middle.diff_at(n + 1)), r0 + r1, c0 + c1);
        diffs.push_back(std::move(m));
    }
    return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

}  // namespace grnov
