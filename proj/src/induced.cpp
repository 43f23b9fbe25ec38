#include "grnov/induced.hpp"

#include <algorithm>
#include <stdexcept>

namespace grnov {

GradedScalar Induced::slot(const SlotKey& s) const {
    auto it = slots_.find(s);
    if (it == slots_.end()) return GradedScalar::zero(ring_);
    return it->second;
}

void Induced::add_slot(const SlotKey& s, const GradedScalar& w) {
    if (w.is_zero()) return;
    auto it = slots_.find(s);
    if (it == slots_.end()) {
        slots_.emplace(s, w);
    } else {
        it->second = it->second + w;
        if (it->second.is_zero()) slots_.erase(it);
    }
}

void Induced::add_pure(int gen, const Homog& a, const GradedScalar& r) {
    if (ring_->h_is_zero(a) || r.is_zero()) return;
    add_slot(SlotKey{gen, a.degree}, GradedScalar::from_homog(ring_, a) * r);
}

Induced Induced::operator-() const {
    Induced o(ring_);
    for (const auto& [s, w] : slots_) o.slots_.emplace(s, -w);
    return o;
}

Induced operator+(const Induced& a, const Induced& b) {
    Induced o = a;
    for (const auto& [s, w] : b.slots_) o.add_slot(s, w);
    return o;
}

Induced operator-(const Induced& a, const Induced& b) { return a + (-b); }

Induced Induced::acted(const GradedScalar& r) const {
    Induced o(ring_);
    for (const auto& [s, w] : slots_) o.add_slot(s, w * r);
    return o;
}

Induced Induced::scaled(const Scalar& c) const {
    Induced o(ring_);
    for (const auto& [s, w] : slots_) o.add_slot(s, w.scaled(c));
    return o;
}

bool Induced::operator==(const Induced& o) const {
    if (slots_.size() != o.slots_.size()) return false;
    for (const auto& [s, w] : slots_) {
        auto it = o.slots_.find(s);
        if (it == o.slots_.end() || !(w == it->second)) return false;
    }
    return true;
}

std::string Induced::to_string() const {
    if (slots_.empty()) return "0";
    std::string s;
    for (const auto& [key, w] : slots_) {
        if (!s.empty()) s += " ; ";
        s += "(" + std::to_string(key.gen) + "," + std::to_string(key.k) + "): " + w.to_string();
    }
    return s;
}

Induced induce(const RingPtr& ring, const std::vector<GradedScalar>& m, const GradedScalar& r) {
    Induced out(ring);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& [d, h] : m[i].components()) out.add_pure(static_cast<int>(i), h, r);
    return out;
}

Induced mu_apply_with(const Induced& x, const Partition& pou) {
    const RingPtr& ring = x.ring();
    if (pou.n != -1) throw std::invalid_argument("mu_apply_with: partition must have type (-1,1)");
    Induced out(ring);
    for (const auto& [s, w] : x.slots()) {
        // expand the slot into pure tensors via a partition of type (k,-k)
        const Partition& pk = ring->partition(s.k);
        for (const auto& pr : pk.pairs) {
            GradedScalar r = GradedScalar::from_homog(ring, pr.v) * w;
            out.add_pure(s.gen, pr.u, r);
            for (const auto& mp : pou.pairs) {
                // c x_j ox y_j r with c = e_gen * u
                Homog left = ring->h_mul(pr.u, mp.u);
                GradedScalar right = GradedScalar::from_homog(ring, mp.v) * r;
                Induced term(ring);
                term.add_pure(s.gen, left, right);
                out = out - term;
            }
        }
    }
    return out;
}

Induced mu_apply(const Induced& x) { return mu_apply_with(x, x.ring()->pou_minus()); }

Induced mu_shift_form(const Induced& x) {
    Induced out(x.ring());
    for (const auto& [s, w] : x.slots()) {
        out.add_slot(s, w);
        out.add_slot(SlotKey{s.gen, s.k - 1}, -w);
    }
    return out;
}

std::vector<GradedScalar> pi_apply(const Induced& x, int ngens) {
    std::vector<GradedScalar> out(static_cast<std::size_t>(ngens), GradedScalar::zero(x.ring()));
    for (const auto& [s, w] : x.slots()) {
        if (s.gen < 0 || s.gen >= ngens) throw std::invalid_argument("pi_apply: generator out of range");
        out[static_cast<std::size_t>(s.gen)] = out[static_cast<std::size_t>(s.gen)] + w;
    }
    return out;
}

Induced iota_apply(const RingPtr& ring, const std::vector<GradedScalar>& m) {
    return induce(ring, m, GradedScalar::one(ring));
}

Induced tau_apply(const Induced& x) {
    const RingPtr& ring = x.ring();
    Induced out(ring);
    for (const auto& [s, w] : x.slots()) {
        const Partition& pk = ring->partition(s.k);
        for (const auto& [g, wg] : w.components()) {
            int n = g - s.k;  // degree of the right tensor factor
            if (n == 0) continue;
            GradedScalar wgs = GradedScalar::from_homog(ring, wg);
            for (const auto& pr : pk.pairs) {
                GradedScalar rn = GradedScalar::from_homog(ring, pr.v) * wgs;
                if (n > 0) {
                    for (int kk = 1; kk <= n; ++kk) {
                        const Partition& pkk = ring->partition(kk);
                        for (const auto& qq : pkk.pairs) {
                            Induced term(ring);
                            term.add_pure(s.gen, ring->h_mul(pr.u, qq.u),
                                          GradedScalar::from_homog(ring, qq.v) * rn);
                            out = out - term;
                        }
                    }
                } else {
                    for (int kk = 0; kk <= -n - 1; ++kk) {
                        const Partition& pkk = ring->partition(-kk);
                        for (const auto& qq : pkk.pairs) {
                            Induced term(ring);
                            term.add_pure(s.gen, ring->h_mul(pr.u, qq.u),
                                          GradedScalar::from_homog(ring, qq.v) * rn);
                            out = out + term;
                        }
                    }
                }
            }
        }
    }
    return out;
}

Induced induced_matrix_apply(const GsMatrix& m, const Induced& x) {
    const RingPtr& ring = x.ring();
    Induced out(ring);
    for (const auto& [s, w] : x.slots()) {
        if (s.gen >= m.cols()) throw std::invalid_argument("induced_matrix_apply: generator out of range");
        for (int i = 0; i < m.rows(); ++i) {
            for (const auto& [h, piece] : m.at(i, s.gen).components())
                out.add_slot(SlotKey{i, s.k + h}, GradedScalar::from_homog(ring, piece) * w);
        }
    }
    return out;
}

int SlotComplex::basis_index(int level, const SlotKey& s) const {
    const auto& b = bases.at(static_cast<std::size_t>(level - cx.lo()));
    auto it = std::lower_bound(b.begin(), b.end(), s);
    if (it == b.end() || !(*it == s)) return -1;
    return static_cast<int>(it - b.begin());
}

namespace {
std::vector<SlotKey> window_basis(int ngens, int lo, int hi) {
    std::vector<SlotKey> b;
    for (int g = 0; g < ngens; ++g)
        for (int k = lo; k <= hi; ++k) b.push_back(SlotKey{g, k});
    return b;
}

// matrix of (M ox id) between slot bases
GsMatrix induced_matrix_on_slots(const RingPtr& ring, const GsMatrix& m,
                                 const std::vector<SlotKey>& src, const std::vector<SlotKey>& dst) {
    GsMatrix out = gs_zero_matrix(ring, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    std::map<SlotKey, int> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < src.size(); ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            for (const auto& [h, piece] : m.at(i, src[j].gen).components()) {
                auto it = index.find(SlotKey{i, src[j].k + h});
                if (it == index.end())
                    throw std::invalid_argument("induced_matrix_on_slots: route leaves the window");
                out.at(it->second, static_cast<int>(j)) =
                    out.at(it->second, static_cast<int>(j)) + GradedScalar::from_homog(ring, piece);
            }
        }
    }
    return out;
}
}  // namespace

SlotComplex induced_complex(const FreeComplex& c, int win_lo, int win_hi) {
    if (win_lo > win_hi) throw std::invalid_argument("induced_complex: empty window");
    const RingPtr& ring = c.ring();
    SlotComplex out;
    if (c.empty()) {
        out.cx = FreeComplex(ring, c.lo(), {}, {});
        return out;
    }
    // windows widen downward so every differential route stays inside
    std::vector<std::pair<int, int>> win(static_cast<std::size_t>(c.hi() - c.lo() + 1));
    win[static_cast<std::size_t>(c.hi() - c.lo())] = {win_lo, win_hi};
    for (int n = c.hi(); n > c.lo(); --n) {
        auto r = degree_range(c.diff_at(n));
        int a = r ? std::min(r->first, 0) : 0;
        int b = r ? std::max(r->second, 0) : 0;
        auto cur = win[static_cast<std::size_t>(n - c.lo())];
        win[static_cast<std::size_t>(n - 1 - c.lo())] = {cur.first + a, cur.second + b};
    }
    std::vector<int> ranks;
    std::vector<std::vector<SlotKey>> bases;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto w = win[static_cast<std::size_t>(n - c.lo())];
        bases.push_back(window_basis(c.rank_at(n), w.first, w.second));
        ranks.push_back(static_cast<int>(bases.back().size()));
    }
    std::vector<GsMatrix> diffs;
    for (int n = c.lo() + 1; n <= c.hi(); ++n)
        diffs.push_back(induced_matrix_on_slots(ring, c.diff_at(n),
                                                bases[static_cast<std::size_t>(n - c.lo())],
                                                bases[static_cast<std::size_t>(n - 1 - c.lo())]));
    out.cx = FreeComplex(ring, c.lo(), std::move(ranks), std::move(diffs));
    out.bases = std::move(bases);
    return out;
}

TorusResult torus(const FreeComplex& c, int win_lo, int win_hi) {
    if (win_lo > win_hi) throw std::invalid_argument("torus: window too small");
    const RingPtr& ring = c.ring();
    TorusResult out;
    if (c.empty()) {
        out.torus.cx = FreeComplex(ring, c.lo(), {}, {});
        return out;
    }
    // X-copy windows V_n widen downward; Y-copy windows are [V.lo-1, V.hi]
    int len = c.hi() - c.lo() + 1;
    std::vector<std::pair<int, int>> v(static_cast<std::size_t>(len));
    v[static_cast<std::size_t>(len - 1)] = {win_lo, win_hi};
    for (int n = c.hi(); n > c.lo(); --n) {
        auto r = degree_range(c.diff_at(n));
        int a = r ? std::min(r->first, 0) : 0;
        int b = r ? std::max(r->second, 0) : 0;
        auto cur = v[static_cast<std::size_t>(n - c.lo())];
        v[static_cast<std::size_t>(n - 1 - c.lo())] = {cur.first + a, cur.second + b};
    }
    auto vwin = [&](int n) { return v[static_cast<std::size_t>(n - c.lo())]; };
    auto xbasis = [&](int n) {  // X-copy of C_n
        if (n < c.lo() || n > c.hi()) return std::vector<SlotKey>{};
        auto w = vwin(n);
        return window_basis(c.rank_at(n), w.first, w.second);
    };
    auto ybasis = [&](int n) {  // Y-copy of C_n
        if (n < c.lo() || n > c.hi()) return std::vector<SlotKey>{};
        auto w = vwin(n);
        return window_basis(c.rank_at(n), w.first - 1, w.second);
    };

    int tlo = c.lo(), thi = c.hi() + 1;
    std::vector<int> ranks;
    std::vector<std::vector<SlotKey>> bases;  // X-part slots then Y-part slots per level
    for (int n = tlo; n <= thi; ++n) {
        auto xb = xbasis(n - 1);
        auto yb = ybasis(n);
        ranks.push_back(static_cast<int>(xb.size() + yb.size()));
        std::vector<SlotKey> all = xb;
        all.insert(all.end(), yb.begin(), yb.end());
        bases.push_back(std::move(all));
    }

    std::vector<GsMatrix> diffs;
    for (int n = tlo + 1; n <= thi; ++n) {
        auto xb_src = xbasis(n - 1), yb_src = ybasis(n);
        auto xb_dst = xbasis(n - 2), yb_dst = ybasis(n - 1);
        int rows = static_cast<int>(xb_dst.size() + yb_dst.size());
        int cols = static_cast<int>(xb_src.size() + yb_src.size());
        GsMatrix m = gs_zero_matrix(ring, rows, cols);
        auto put = [&](const GsMatrix& blk, int ro, int co) {
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j) m.at(ro + i, co + j) = blk.at(i, j);
        };
        if (!xb_src.empty() && !xb_dst.empty())
            put(mat_neg(induced_matrix_on_slots(ring, c.diff_at(n - 1), xb_src, xb_dst)), 0, 0);
        if (!xb_src.empty() && !yb_dst.empty()) {
            // mu = identity minus down-shift, X-copy of C_{n-1} into Y-copy of C_{n-1}
            GsMatrix mu = gs_zero_matrix(ring, static_cast<int>(yb_dst.size()),
                                         static_cast<int>(xb_src.size()));
            std::map<SlotKey, int> yindex;
            for (std::size_t i = 0; i < yb_dst.size(); ++i) yindex[yb_dst[i]] = static_cast<int>(i);
            for (std::size_t j = 0; j < xb_src.size(); ++j) {
                auto hit = yindex.find(xb_src[j]);
                if (hit == yindex.end()) throw std::logic_error("torus: Y window misses X slot");
                mu.at(hit->second, static_cast<int>(j)) = GradedScalar::one(ring);
                auto down = yindex.find(SlotKey{xb_src[j].gen, xb_src[j].k - 1});
                if (down == yindex.end()) throw std::logic_error("torus: Y window misses shifted slot");
                mu.at(down->second, static_cast<int>(j)) = -GradedScalar::one(ring);
            }
            put(mu, static_cast<int>(xb_dst.size()), 0);
        }
        if (!yb_src.empty() && !yb_dst.empty())
            put(induced_matrix_on_slots(ring, c.diff_at(n), yb_src, yb_dst),
                static_cast<int>(xb_dst.size()), static_cast<int>(xb_src.size()));
        diffs.push_back(std::move(m));
    }
    out.torus.cx = FreeComplex(ring, tlo, std::move(ranks), std::move(diffs));
    out.torus.bases = std::move(bases);

    for (int n = tlo; n <= thi; ++n) {
        auto xb = xbasis(n - 1);
        auto yb = ybasis(n);
        GsMatrix p = gs_zero_matrix(ring, c.rank_at(n), static_cast<int>(xb.size() + yb.size()));
        for (std::size_t j = 0; j < yb.size(); ++j)
            p.at(yb[j].gen, static_cast<int>(xb.size() + j)) = GradedScalar::one(ring);
        out.projection.push_back(std::move(p));
    }
    return out;
}

namespace {
bool gs_unit_laurent(const GradedScalar& g) {
    if (g.ring()->kind() != Ring::Kind::laurent) return false;
    return g.components().size() == 1;
}
}  // namespace

FreeComplex simplify_complex(const FreeComplex& c) {
    const RingPtr& ring = c.ring();
    int lo = c.lo();
    std::vector<int> ranks = c.ranks();
    std::vector<GsMatrix> diffs;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs.push_back(c.diff_at(n));

    auto drop_row = [&](GsMatrix& m, int row) {
        GsMatrix r = gs_zero_matrix(ring, m.rows() - 1, m.cols());
        for (int i = 0, ii = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            for (int j = 0; j < m.cols(); ++j) r.at(ii, j) = m.at(i, j);
            ++ii;
        }
        m = std::move(r);
    };
    auto drop_col = [&](GsMatrix& m, int col) {
        GsMatrix r = gs_zero_matrix(ring, m.rows(), m.cols() - 1);
        for (int j = 0, jj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            for (int i = 0; i < m.rows(); ++i) r.at(i, jj) = m.at(i, j);
            ++jj;
        }
        m = std::move(r);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t di = 0; di < diffs.size() && !progress; ++di) {
            GsMatrix& d = diffs[di];
            for (int i = 0; i < d.rows() && !progress; ++i)
                for (int j = 0; j < d.cols() && !progress; ++j) {
                    if (!gs_unit_laurent(d.at(i, j))) continue;
                    // reduce: d' = D - c u^{-1} r on the complement of (i,j)
                    GradedScalar u = d.at(i, j);
                    auto span = u.degree_span();
                    Scalar lead = std::get<Scalar>(u.components().begin()->second.payload);
                    GradedScalar uinv = GradedScalar::from_homog(
                        ring, ring->h_from_coeff(-span->first, lead.inverse()));
                    GsMatrix nd = gs_zero_matrix(ring, d.rows() - 1, d.cols() - 1);
                    for (int a = 0, ai = 0; a < d.rows(); ++a) {
                        if (a == i) continue;
                        for (int b = 0, bj = 0; b < d.cols(); ++b) {
                            if (b == j) continue;
                            nd.at(ai, bj) = d.at(a, b) - d.at(a, j) * uinv * d.at(i, b);
                            ++bj;
                        }
                        ++ai;
                    }
                    d = std::move(nd);
                    if (di + 1 < diffs.size()) drop_row(diffs[di + 1], j);
                    if (di > 0) drop_col(diffs[di - 1], i);
                    ranks[di] -= 1;      // target level (index lo+di)
                    ranks[di + 1] -= 1;  // source level
                    progress = true;
                }
        }
    }
    return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

}  // namespace grnov
