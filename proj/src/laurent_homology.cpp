#include "grnov/laurent_homology.hpp"

#include <stdexcept>

namespace grnov {

namespace {
void require_laurent(const RingPtr& ring) {
    if (!ring || ring->kind() != Ring::Kind::laurent)
        throw std::invalid_argument("operation requires an untwisted Laurent ring");
}

Scalar lp_coeff(const GradedScalar& f, int k) {
    auto it = f.components().find(k);
    if (it == f.components().end()) return Scalar::zero(f.ring()->field());
    return std::get<Scalar>(it->second.payload);
}

GradedScalar lp_term(const RingPtr& ring, int degree, const Scalar& c) {
    return GradedScalar::from_homog(ring, ring->h_from_coeff(degree, c));
}
}  // namespace

int lp_width(const GradedScalar& f) {
    auto s = f.degree_span();
    if (!s) return -1;
    return s->second - s->first;
}

void lp_divmod(const GradedScalar& f, const GradedScalar& g, GradedScalar& q, GradedScalar& r) {
    require_laurent(f.ring());
    if (g.is_zero()) throw std::domain_error("lp_divmod: division by zero");
    const RingPtr& ring = f.ring();
    q = GradedScalar::zero(ring);
    r = f;
    auto gs = g.degree_span();
    int gw = gs->second - gs->first;
    Scalar glead = lp_coeff(g, gs->second);
    while (!r.is_zero()) {
        auto rs = r.degree_span();
        if (rs->second - rs->first < gw) break;
        // kill the top term of r
        Scalar c = lp_coeff(r, rs->second) / glead;
        GradedScalar factor = lp_term(ring, rs->second - gs->second, c);
        q = q + factor;
        r = r - factor * g;
        // the top strictly drops while the bottom cannot go below
        // min(rs->first, rs->second - gw), so the loop terminates
    }
}

GradedScalar lp_normalize_unit(const GradedScalar& f) {
    if (f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    auto s = f.degree_span();
    Scalar lead = lp_coeff(f, s->second);
    return f * lp_term(ring, -s->first, lead.inverse());
}

bool lp_divides(const GradedScalar& g, const GradedScalar& f) {
    if (f.is_zero()) return true;
    if (g.is_zero()) return false;
    GradedScalar q, r;
    lp_divmod(f, g, q, r);
    return r.is_zero();
}

SmithResult laurent_smith(const RingPtr& ring, GsMatrix m) {
    require_laurent(ring);
    SmithResult out;
    int rows = m.rows(), cols = m.cols();
    int t = 0;
    auto row_sub = [&](int dst, int src, const GradedScalar& c) {
        for (int j = 0; j < cols; ++j) m.at(dst, j) = m.at(dst, j) - c * m.at(src, j);
    };
    auto col_sub = [&](int dst, int src, const GradedScalar& c) {
        for (int i = 0; i < rows; ++i) m.at(i, dst) = m.at(i, dst) - c * m.at(i, src);
    };
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal width in the trailing submatrix
        int bi = -1, bj = -1, bw = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                int w = lp_width(m.at(i, j));
                if (w < 0) continue;
                if (bw < 0 || w < bw) {
                    bw = w;
                    bi = i;
                    bj = j;
                }
            }
        if (bw < 0) break;  // submatrix is zero
        if (bi != t)
            for (int j = 0; j < cols; ++j) std::swap(m.at(bi, j), m.at(t, j));
        if (bj != t)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, bj), m.at(i, t));

        bool stable = false;
        while (!stable) {
            stable = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t).is_zero()) continue;
                GradedScalar q, r;
                lp_divmod(m.at(i, t), m.at(t, t), q, r);
                row_sub(i, t, q);
                if (!m.at(i, t).is_zero()) {
                    for (int j = 0; j < cols; ++j) std::swap(m.at(i, j), m.at(t, j));
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j).is_zero()) continue;
                GradedScalar q, r;
                lp_divmod(m.at(t, j), m.at(t, t), q, r);
                col_sub(j, t, q);
                if (!m.at(t, j).is_zero()) {
                    for (int i = 0; i < rows; ++i) std::swap(m.at(i, j), m.at(i, t));
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            // divisibility of the remaining block by the pivot
            for (int i = t + 1; i < rows && stable; ++i)
                for (int j = t + 1; j < cols && stable; ++j) {
                    if (lp_divides(m.at(t, t), m.at(i, j))) continue;
                    for (int jj = 0; jj < cols; ++jj) m.at(t, jj) = m.at(t, jj) + m.at(i, jj);
                    stable = false;
                }
        }
        out.invariant_factors.push_back(lp_normalize_unit(m.at(t, t)));
        ++t;
    }
    out.rank = t;
    return out;
}

bool LaurentHomology::torsion_only() const {
    for (const auto& [n, lvl] : levels)
        if (lvl.free_rank != 0) return false;
    return true;
}

std::map<int, long> LaurentHomology::k_dimensions() const {
    std::map<int, long> out;
    for (const auto& [n, lvl] : levels) {
        if (lvl.free_rank != 0)
            throw std::domain_error("k_dimensions: homology has positive free rank at index " +
                                    std::to_string(n));
        long d = 0;
        for (const auto& f : lvl.invariant_factors) d += lp_width(f);
        out[n] = d;
    }
    return out;
}

LaurentHomology laurent_homology(const FreeComplex& c) {
    require_laurent(c.ring());
    auto check = validate_complex(c);
    if (!check.ok) throw std::invalid_argument("laurent_homology: " + check.message);
    LaurentHomology out;
    if (c.empty()) return out;
    std::map<int, SmithResult> smith;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) smith[n] = laurent_smith(c.ring(), c.diff_at(n));
    for (int n = c.lo(); n <= c.hi(); ++n) {
        HomologyLevel lvl;
        int rn = smith.count(n) ? smith[n].rank : 0;
        int rn1 = smith.count(n + 1) ? smith[n + 1].rank : 0;
        lvl.free_rank = c.rank_at(n) - rn - rn1;
        if (smith.count(n + 1)) {
            for (const auto& f : smith[n + 1].invariant_factors)
                if (lp_width(f) > 0) lvl.invariant_factors.push_back(f);
        }
        out.levels[n] = std::move(lvl);
    }
    return out;
}

int laurent_matrix_rank(const RingPtr& ring, const GsMatrix& m) {
    return laurent_smith(ring, m).rank;
}

NovikovDecision laurent_novikov_decide(const FreeComplex& c) {
    require_laurent(c.ring());
    auto check = validate_complex(c);
    if (!check.ok) throw std::invalid_argument("laurent_novikov_decide: " + check.message);
    bool acyclic = true;
    for (int n = c.lo(); n <= c.hi() && acyclic; ++n) {
        int rn = laurent_matrix_rank(c.ring(), c.diff_at(n));
        int rn1 = laurent_matrix_rank(c.ring(), c.diff_at(n + 1));
        if (rn + rn1 != c.rank_at(n)) acyclic = false;
    }
    // both Novikov rings are field extensions of K(t), so the verdicts agree
    NovikovDecision d;
    d.plus = acyclic ? NovikovVerdict::acyclic : NovikovVerdict::not_acyclic;
    d.minus = d.plus;
    return d;
}

}  // namespace grnov
