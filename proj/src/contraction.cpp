#include "grnov/contraction.hpp"

#include <stdexcept>

namespace grnov {

NovMatrix Certificate::map_at(int n, const FreeComplex& c) const {
    int idx = n - lo;
    if (idx >= 0 && idx < static_cast<int>(maps.size())) return maps[static_cast<std::size_t>(idx)];
    return nov_zero_matrix(c.ring(), c.rank_at(n + 1), c.rank_at(n));
}

VerifyResult contraction_verify(const FreeComplex& c, const Certificate& cert) {
    if (cert.direction == Certificate::Direction::minus) {
        // minus certificates carry their maps in plus convention over the
        // grading-reversed ring
        FreeComplex rc = c.reversed();
        Certificate rcert = cert;
        rcert.direction = Certificate::Direction::plus;
        auto r = contraction_verify(rc, rcert);
        if (!r.ok) r.message = "(minus direction, stated over the reversed grading) " + r.message;
        return r;
    }
    const RingPtr& ring = c.ring();
    long T = cert.truncation;
    for (std::size_t i = 0; i < cert.maps.size(); ++i) {
        int n = cert.lo + static_cast<int>(i);
        if (cert.maps[i].rows() != c.rank_at(n + 1) || cert.maps[i].cols() != c.rank_at(n))
            return {false, "certificate map at index " + std::to_string(n) + " has the wrong shape"};
    }
    for (int n = c.lo(); n <= c.hi(); ++n) {
        NovMatrix lhs = nov_mat_mul(ring, nov_from_gs(c.diff_at(n + 1)), cert.map_at(n, c));
        NovMatrix rhs = nov_mat_mul(ring, cert.map_at(n - 1, c), nov_from_gs(c.diff_at(n)));
        NovMatrix idm = nov_identity_matrix(ring, c.rank_at(n));
        for (int i = 0; i < idm.rows(); ++i)
            for (int j = 0; j < idm.cols(); ++j) {
                TruncNov residual = lhs.at(i, j) + rhs.at(i, j) - idm.at(i, j);
                if (residual.hi() < T)
                    return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") at index " + std::to_string(n) +
                                       " is only determined up to degree " + std::to_string(residual.hi()) +
                                       " < truncation " + std::to_string(T) +
                                       "; certificate windows are too narrow"};
                if (!residual.is_zero_up_to(T)) {
                    int bad = 0;
                    for (const auto& [dg, h] : residual.components())
                        if (dg <= T && !ring->h_is_zero(h)) {
                            bad = dg;
                            break;
                        }
                    return {false, "d s + s d != id at index " + std::to_string(n) + ", entry (" +
                                       std::to_string(i) + "," + std::to_string(j) + "), degree " +
                                       std::to_string(bad) + ": " + residual.to_string()};
                }
            }
    }
    return {true, ""};
}

namespace {

// ---- the derived pipeline: C ox Nov <- cone(mu) -> cone(nu) transports ----

struct ConeColumn {
    Induced x;  // component in (C ox R)_{n-1}
    Induced y;  // component in (C ox R)_n
};

ConeColumn cone_column_zero(const RingPtr& ring) { return ConeColumn{Induced(ring), Induced(ring)}; }

ConeColumn cone_add(const ConeColumn& a, const ConeColumn& b) {
    return ConeColumn{a.x + b.x, a.y + b.y};
}

ConeColumn cone_acted(const ConeColumn& a, const GradedScalar& r) {
    return ConeColumn{a.x.acted(r), a.y.acted(r)};
}

// cone(mu) differential: (x, y) -> (-(d ox id)x, mu x + (d ox id)y)
ConeColumn cone_mu_diff(const FreeComplex& c, int n, const ConeColumn& v) {
    ConeColumn out = cone_column_zero(c.ring());
    out.x = -induced_matrix_apply(c.diff_at(n - 1), v.x);
    out.y = mu_apply(v.x) + induced_matrix_apply(c.diff_at(n), v.y);
    return out;
}

// contraction of ker(phi): kappa(x, y) = (tau y, 0)
ConeColumn cone_kappa(const ConeColumn& v) {
    return ConeColumn{tau_apply(v.y), Induced(v.x.ring())};
}

bool induced_in_window(const Induced& v, int wlo, int whi) {
    for (const auto& [s, w] : v.slots())
        if (s.k < wlo || s.k > whi) return false;
    return true;
}

// write an Induced as a dense slot-coordinate column
void write_column(const SlotSpace& sp, const Induced& v, GsMatrix& m, int col) {
    for (const auto& [s, w] : v.slots()) {
        int idx = sp.index(s.gen, s.k);
        if (idx < 0) throw std::invalid_argument("insufficient window: slot degree " + std::to_string(s.k));
        m.at(idx, col) = m.at(idx, col) + w;
    }
}

struct PsiPrime {
    // per chain index n: columns over [slots(C_{n-1}) | slots(C_n)]
    std::map<int, std::vector<ConeColumn>> cols;
};

// chain-level section of cone(mu) -> C with phi psi' = id, built by lifting
// through the contractible kernel
PsiPrime build_psi_prime(const FreeComplex& c) {
    const RingPtr& ring = c.ring();
    PsiPrime psi;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::vector<ConeColumn> cols;
        GsMatrix d = c.diff_at(n);
        for (int i = 0; i < c.rank_at(n); ++i) {
            // sigma(e_i) = (0, slot(i,0) value 1)
            ConeColumn sigma = cone_column_zero(ring);
            sigma.y.add_slot(SlotKey{i, 0}, GradedScalar::one(ring));
            // xi = psi'_{n-1}(d e_i) - d sigma(e_i)
            ConeColumn xi = cone_column_zero(ring);
            if (n > c.lo()) {
                const auto& prev = psi.cols.at(n - 1);
                for (int j = 0; j < d.rows(); ++j)
                    if (!d.at(j, i).is_zero())
                        xi = cone_add(xi, cone_acted(prev[static_cast<std::size_t>(j)], d.at(j, i)));
            }
            ConeColumn dsigma = cone_mu_diff(c, n, sigma);
            xi = cone_add(xi, ConeColumn{-dsigma.x, -dsigma.y});
            // xi lies in ker(phi) and is a cycle; correct by kappa(xi)
            auto pi_y = pi_apply(xi.y, c.rank_at(n - 1));
            for (const auto& g : pi_y)
                if (!g.is_zero()) throw std::logic_error("psi-prime lift: defect leaves the kernel");
            ConeColumn corr = cone_kappa(xi);
            ConeColumn dcorr = cone_mu_diff(c, n, corr);
            if (!((dcorr.x == xi.x) && (dcorr.y == xi.y)))
                throw std::logic_error("psi-prime lift: kernel contraction failed");
            cols.push_back(cone_add(sigma, corr));
        }
        psi.cols[n] = std::move(cols);
    }
    return psi;
}

NovMatrix nov_of_win(const RingPtr& ring, const WinMat& w, const char* what) {
    for (std::size_t j = 0; j < w.valid.size(); ++j)
        if (!w.valid[j])
            throw std::invalid_argument(std::string("insufficient window while assembling ") + what +
                                        "; widen [wlo, whi]");
    return nov_from_gs(w.m);
}

}  // namespace

Certificate contraction_from_domination(const DominationData& data, Certificate::Direction dir,
                                        long truncation) {
    if (dir == Certificate::Direction::minus) {
        DominationData rdata = data.reversed();
        Certificate out = contraction_from_domination(rdata, Certificate::Direction::plus, truncation);
        out.direction = Certificate::Direction::minus;
        auto check = contraction_verify(data.C, out);
        if (!check.ok)
            throw std::logic_error("contraction_from_domination (minus): certificate failed: " +
                                   check.message);
        return out;
    }
    auto ok = domination_validate(data);
    if (!ok.ok) throw std::invalid_argument("contraction_from_domination: " + ok.message);
    const FreeComplex& c = data.C;
    const RingPtr& ring = c.ring();

    NuData nus = nu_build(data);
    PsiPrime psi = build_psi_prime(c);

    // transports between C and the cones, as windowed matrices
    auto slot_pi = [&](int n) {  // slots(C_n) -> generators of C_n
        SlotSpace sp = data.slot_space(n);
        GsMatrix m = gs_zero_matrix(ring, c.rank_at(n), sp.size());
        for (int idx = 0; idx < sp.size(); ++idx) m.at(sp.key(idx).gen, idx) = GradedScalar::one(ring);
        return win_full(m);
    };
    auto take_rows = [&](const WinMat& w, int from, int count) {
        WinMat out;
        out.m = gs_zero_matrix(ring, count, w.m.cols());
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < w.m.cols(); ++j) out.m.at(i, j) = w.m.at(from + i, j);
        out.valid = w.valid;
        return out;
    };
    auto psi_parts = [&](int n) {  // columns of psi'_n split as (x-part, y-part)
        SlotSpace up = data.slot_space(n - 1), lo = data.slot_space(n);
        GsMatrix x = gs_zero_matrix(ring, up.size(), c.rank_at(n));
        GsMatrix y = gs_zero_matrix(ring, lo.size(), c.rank_at(n));
        auto it = psi.cols.find(n);
        if (it != psi.cols.end())
            for (int i = 0; i < c.rank_at(n); ++i) {
                const ConeColumn& col = it->second[static_cast<std::size_t>(i)];
                if (!induced_in_window(col.x, data.wlo, data.whi) ||
                    !induced_in_window(col.y, data.wlo, data.whi))
                    throw std::invalid_argument(
                        "contraction_from_domination: insufficient window for the section columns");
                write_column(up, col.x, x, i);
                write_column(lo, col.y, y, i);
            }
        return std::make_pair(win_full(std::move(x)), win_full(std::move(y)));
    };

    // polynomial transports per level
    std::map<int, GsMatrix> u_mats, v_mats, h_mats;
    long poly_lo = 0;  // most negative degree across the transports
    auto note_span = [&](const GsMatrix& m) {
        auto r = degree_range(m);
        if (r) poly_lo = std::min(poly_lo, static_cast<long>(r->first));
    };
    for (int n = c.lo(); n <= c.hi() - 1; ++n) {
        SlotSpace sp_nm1 = data.slot_space(n - 1);
        SlotSpace sp_n = data.slot_space(n);

        auto [psix, psiy] = psi_parts(n);
        WinMat a_up = win_full(data.alpha_at(n - 1));
        WinMat a_lo = win_full(data.alpha_at(n));
        WinMat jmap = mather_j(data, nus, n - 1);  // slots(C_{n-1}) -> D^_n
        WinMat u_up = win_compose(ring, a_up, psix);
        WinMat u_lo = win_add(ring, win_compose(ring, jmap, psix), win_compose(ring, a_lo, psiy));
        nov_of_win(ring, u_up, "u (upper)");
        nov_of_win(ring, u_lo, "u (lower)");
        GsMatrix u = mat_block2x2(u_up.m, GsMatrix(), u_lo.m, GsMatrix(), GradedScalar::zero(ring));
        note_span(u);
        u_mats.emplace(n, std::move(u));

        // v_{n+1} = phi . beta* over the cone(nu)_{n+1} basis = [pi.J'', pi.beta]
        WinMat b_up = win_full(data.beta_at(n));      // D^_n -> slots(C_n)
        WinMat b_lo = win_full(data.beta_at(n + 1));  // D^_{n+1} -> slots(C_{n+1})
        WinMat jpp = win_compose(
            ring, win_neg(win_compose(ring, win_full(data.homotopy_at(n)), slot_mu(data, n))), b_up);
        WinMat v_left = win_compose(ring, slot_pi(n + 1), jpp);
        WinMat v_right = win_compose(ring, slot_pi(n + 1), b_lo);
        nov_of_win(ring, v_left, "v (J'' part)");
        nov_of_win(ring, v_right, "v (beta part)");
        GsMatrix v = mat_block2x2(v_left.m, v_right.m, GsMatrix(), GsMatrix(), GradedScalar::zero(ring));
        note_span(v);
        v_mats.emplace(n, std::move(v));

        // h'' = -phi . K . psi' with K = [[H, 0], [-H mu H, -H]]
        WinMat h_nm1 = win_full(data.homotopy_at(n - 1));
        WinMat h_n = win_full(data.homotopy_at(n));
        WinMat k_lower_left =
            win_neg(win_compose(ring, h_n, win_compose(ring, slot_mu(data, n), h_nm1)));
        WinMat ky = win_add(ring, win_compose(ring, k_lower_left, psix),
                            win_neg(win_compose(ring, h_n, psiy)));
        WinMat hpp = win_neg(win_compose(ring, slot_pi(n + 1), ky));
        nov_of_win(ring, hpp, "transport homotopy");
        note_span(hpp.m);
        h_mats.emplace(n, hpp.m);
    }

    // D summand degree span widens the staircase cutoff
    int d_span = 0;
    {
        int cmin = 0, cmax = 0;
        bool any = false;
        for (int n = data.D.lo(); n <= data.D.hi(); ++n)
            for (const auto& s : data.D.level(n)) {
                cmin = any ? std::min(cmin, s.degree) : s.degree;
                cmax = any ? std::max(cmax, s.degree) : s.degree;
                any = true;
            }
        d_span = cmax - cmin;
    }
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        auto r = degree_range(c.diff_at(n));
        if (r) poly_lo = std::min(poly_lo, static_cast<long>(r->first));
    }
    long t_internal = truncation + std::max(0L, -poly_lo) + d_span + 4;

    // staircase contraction of cone(nu) ox Nov: every term of
    // sum_j (-1)^j s_col (d_H s_col)^j is a polynomial matrix whose entries
    // are homogeneous of degree (target summand) - (source summand) + j, so
    // the series truncates exactly at t_internal
    auto dhat = [&](int ell) {  // d_H' : cone_ell -> cone_{ell-1}, [[0,0],[-zeta,0]]
        int up_src = static_cast<int>(data.D.level(ell - 1).size());
        int lo_src = static_cast<int>(data.D.level(ell).size());
        int up_dst = static_cast<int>(data.D.level(ell - 2).size());
        int lo_dst = up_src;
        GsMatrix m = gs_zero_matrix(ring, up_dst + lo_dst, up_src + lo_src);
        GsMatrix z = nus.zeta_at(ell - 1, data);
        for (int i = 0; i < z.rows(); ++i)
            for (int j = 0; j < z.cols(); ++j) m.at(up_dst + i, j) = -z.at(i, j);
        return m;
    };
    auto scol = [&](int ell) {  // cone_ell -> cone_{ell+1}, [[-G, id],[0, G]]
        int up_src = static_cast<int>(data.D.level(ell - 1).size());
        int lo_src = static_cast<int>(data.D.level(ell).size());
        int up_dst = lo_src;
        int lo_dst = static_cast<int>(data.D.level(ell + 1).size());
        GsMatrix m = gs_zero_matrix(ring, up_dst + lo_dst, up_src + lo_src);
        GsMatrix g0 = data.d_homotopy_at(ell - 1);
        for (int i = 0; i < g0.rows(); ++i)
            for (int j = 0; j < g0.cols(); ++j) m.at(i, j) = -g0.at(i, j);
        for (int i = 0; i < lo_src; ++i) m.at(i, up_src + i) = GradedScalar::one(ring);
        GsMatrix g1 = data.d_homotopy_at(ell);
        for (int i = 0; i < g1.rows(); ++i)
            for (int j = 0; j < g1.cols(); ++j) m.at(up_dst + i, up_src + j) = g1.at(i, j);
        return m;
    };
    auto staircase = [&](int ell) {
        GsMatrix s0 = scol(ell);
        GsMatrix x = gs_identity_matrix(ring, s0.cols());
        GsMatrix acc = gs_zero_matrix(ring, s0.rows(), s0.cols());
        long sign = 1;
        for (long j = 0; j <= 2 * (t_internal + d_span) + 4; ++j) {
            GsMatrix term = gs_mat_mul(ring, s0, x);
            if (sign < 0) term = mat_neg(term);
            acc = mat_add(acc, term);
            x = gs_mat_mul(ring, dhat(ell + 1), gs_mat_mul(ring, scol(ell), x));
            auto xspan = degree_range(x);
            if (!xspan || xspan->first > t_internal + d_span) break;
            sign = -sign;
        }
        return nov_mat_truncated(nov_from_gs(acc), t_internal);
    };

    std::vector<NovMatrix> maps;
    for (int n = c.lo(); n <= c.hi() - 1; ++n) {
        NovMatrix s = mat_add(
            nov_from_gs(h_mats.at(n)),
            nov_mat_mul(ring, nov_from_gs(v_mats.at(n)),
                        nov_mat_mul(ring, staircase(n), nov_from_gs(u_mats.at(n)))));
        maps.push_back(s);
    }

    Certificate cert;
    cert.direction = Certificate::Direction::plus;
    cert.truncation = truncation;
    cert.lo = c.lo();
    cert.maps = std::move(maps);
    auto check = contraction_verify(c, cert);
    if (!check.ok)
        throw std::logic_error("contraction_from_domination: assembled certificate failed: " +
                               check.message);
    return cert;
}

// ---- order-by-order search ----

namespace {
struct SparseRow {
    std::map<long, Scalar> coeff;
    Scalar rhs;
};

// online Gaussian elimination keyed by ascending unknown ids
class SparseSolver {
  public:
    explicit SparseSolver(const Field& f) : field_(f) {}

    // returns false on inconsistency
    bool add(SparseRow row) {
        while (!row.coeff.empty()) {
            long col = row.coeff.begin()->first;
            auto piv = pivots_.find(col);
            if (piv == pivots_.end()) {
                Scalar lead = row.coeff.begin()->second;
                Scalar inv = lead.inverse();
                for (auto& [c, v] : row.coeff) v = v * inv;
                row.rhs = row.rhs * inv;
                pivots_.emplace(col, std::move(row));
                return true;
            }
            Scalar factor = row.coeff.begin()->second;
            const SparseRow& p = piv->second;
            for (const auto& [c, v] : p.coeff) {
                auto it = row.coeff.find(c);
                if (it == row.coeff.end()) {
                    Scalar nv = -(factor * v);
                    if (!nv.is_zero()) row.coeff.emplace(c, nv);
                } else {
                    it->second = it->second - factor * v;
                    if (it->second.is_zero()) row.coeff.erase(it);
                }
            }
            row.rhs = row.rhs - factor * p.rhs;
        }
        return row.rhs.is_zero();
    }

    // free unknowns are zero
    std::map<long, Scalar> solve() const {
        std::map<long, Scalar> x;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Scalar val = it->second.rhs;
            for (const auto& [c, v] : it->second.coeff) {
                if (c == it->first) continue;
                auto xx = x.find(c);
                if (xx != x.end()) val = val - v * xx->second;
            }
            x[it->first] = val;
        }
        return x;
    }

  private:
    Field field_;
    std::map<long, SparseRow> pivots_;
};
}  // namespace

int contraction_default_window_lo(const FreeComplex& c, long truncation) {
    int lo = 0, hi = 0;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        auto r = degree_range(c.diff_at(n));
        if (r) {
            lo = std::min(lo, r->first);
            hi = std::max(hi, r->second);
        }
    }
    int levels = c.empty() ? 0 : c.hi() - c.lo() + 1;
    int spread = std::max(hi, -lo);
    return static_cast<int>(-(truncation + static_cast<long>(spread) * (levels + 1) + 2));
}

std::optional<Certificate> contraction_search(const FreeComplex& c, Certificate::Direction dir,
                                              long truncation, int window_lo) {
    if (!c.ring()->component_finite())
        throw std::invalid_argument(
            "contraction_search: ring components are infinite-dimensional over K; "
            "only certificate verification is offered for this ring");
    if (dir == Certificate::Direction::minus) {
        FreeComplex rc = c.reversed();
        auto found = contraction_search(rc, Certificate::Direction::plus, truncation, window_lo);
        if (!found) return std::nullopt;
        Certificate out = *found;
        out.direction = Certificate::Direction::minus;
        auto check = contraction_verify(c, out);
        if (!check.ok) throw std::logic_error("contraction_search (minus): " + check.message);
        return out;
    }
    auto ok = validate_complex(c);
    if (!ok.ok) throw std::invalid_argument("contraction_search: " + ok.message);
    if (c.empty()) {
        Certificate cert;
        cert.truncation = truncation;
        cert.lo = c.lo();
        return cert;
    }

    const RingPtr& ring = c.ring();
    const Field& f = ring->field();
    int dmin = 0;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        auto r = degree_range(c.diff_at(n));
        if (r) dmin = std::min(dmin, r->first);
    }
    long g_hi = truncation + std::max(0, -dmin);
    long g_lo = window_lo;
    if (g_lo > g_hi) return std::nullopt;
    std::size_t dim = ring->component_dim();

    // unknown ids ordered by degree first so the elimination stays banded
    struct EntryInfo {
        int n, i, j;
    };
    std::vector<EntryInfo> entries;
    for (int n = c.lo(); n <= c.hi() - 1; ++n) {
        for (int i = 0; i < c.rank_at(n + 1); ++i)
            for (int j = 0; j < c.rank_at(n); ++j) entries.push_back(EntryInfo{n, i, j});
    }
    // id(entry e, degree g, basis b) = ((g - g_lo) * entries.size() + index(e)) * dim + b
    auto unknown_id = [&](std::size_t entry_idx, long g, std::size_t b) {
        return ((g - g_lo) * static_cast<long>(entries.size()) + static_cast<long>(entry_idx)) *
                   static_cast<long>(dim) +
               static_cast<long>(b);
    };
    std::map<std::tuple<int, int, int>, std::size_t> entry_index;
    for (std::size_t e = 0; e < entries.size(); ++e)
        entry_index[{entries[e].n, entries[e].i, entries[e].j}] = e;

    SparseSolver solver(f);
    bool consistent = true;
    // equations: component (output degree g, basis row) of
    //   d_{n+1} s_n + s_{n-1} d_n - id = 0  at level n, entry (i, j)
    for (long g = g_lo + std::min(dmin, 0); g <= truncation && consistent; ++g) {
        for (int n = c.lo(); n <= c.hi() && consistent; ++n) {
            GsMatrix dn1 = c.diff_at(n + 1);
            GsMatrix dn = c.diff_at(n);
            for (int i = 0; i < c.rank_at(n) && consistent; ++i)
                for (int j = 0; j < c.rank_at(n) && consistent; ++j) {
                    for (std::size_t b = 0; b < dim && consistent; ++b) {
                        SparseRow row;
                        row.rhs = Scalar::zero(f);
                        // d_{n+1}(i, k) * s_n(k, j): piece deg h * unknown deg g-h
                        for (int k = 0; k < c.rank_at(n + 1); ++k) {
                            auto it = entry_index.find({n, k, j});
                            if (it == entry_index.end()) continue;
                            for (const auto& [h, piece] : dn1.at(i, k).components()) {
                                long gs = g - h;
                                if (gs < g_lo || gs > g_hi) continue;
                                auto lm = ring->left_mul_matrix(piece, static_cast<int>(gs));
                                for (std::size_t bs = 0; bs < dim; ++bs) {
                                    if (lm[b][bs].is_zero()) continue;
                                    long id = unknown_id(it->second, gs, bs);
                                    auto rit = row.coeff.find(id);
                                    if (rit == row.coeff.end())
                                        row.coeff.emplace(id, lm[b][bs]);
                                    else {
                                        rit->second = rit->second + lm[b][bs];
                                        if (rit->second.is_zero()) row.coeff.erase(rit);
                                    }
                                }
                            }
                        }
                        // s_{n-1}(i, k) * d_n(k, j): unknown deg g-h times piece deg h
                        for (int k = 0; k < c.rank_at(n - 1); ++k) {
                            auto it = entry_index.find({n - 1, i, k});
                            if (it == entry_index.end()) continue;
                            for (const auto& [h, piece] : dn.at(k, j).components()) {
                                long gs = g - h;
                                if (gs < g_lo || gs > g_hi) continue;
                                auto rm = ring->right_mul_matrix(piece, static_cast<int>(gs));
                                for (std::size_t bs = 0; bs < dim; ++bs) {
                                    if (rm[b][bs].is_zero()) continue;
                                    long id = unknown_id(it->second, gs, bs);
                                    auto rit = row.coeff.find(id);
                                    if (rit == row.coeff.end())
                                        row.coeff.emplace(id, rm[b][bs]);
                                    else {
                                        rit->second = rit->second + rm[b][bs];
                                        if (rit->second.is_zero()) row.coeff.erase(rit);
                                    }
                                }
                            }
                        }
                        if (i == j && g == 0) {
                            Homog one = ring->h_one();
                            row.rhs = ring->h_coords(one)[b];
                        }
                        if (row.coeff.empty() && row.rhs.is_zero()) continue;
                        if (!solver.add(std::move(row))) consistent = false;
                    }
                }
        }
    }
    if (!consistent) return std::nullopt;

    auto solution = solver.solve();
    std::vector<NovMatrix> maps;
    for (int n = c.lo(); n <= c.hi() - 1; ++n)
        maps.push_back(nov_zero_matrix(ring, c.rank_at(n + 1), c.rank_at(n)));
    for (std::size_t e = 0; e < entries.size(); ++e) {
        std::map<int, Homog> comps;
        for (long g = g_lo; g <= g_hi; ++g) {
            std::vector<Scalar> coords(dim, Scalar::zero(f));
            bool nonzero = false;
            for (std::size_t b = 0; b < dim; ++b) {
                auto it = solution.find(unknown_id(e, g, b));
                if (it != solution.end() && !it->second.is_zero()) {
                    coords[b] = it->second;
                    nonzero = true;
                }
            }
            if (nonzero) comps.emplace(static_cast<int>(g), ring->h_from_component_coords(static_cast<int>(g), coords));
        }
        if (comps.empty()) continue;
        TruncNov val = TruncNov::from_components(ring, g_lo, kNovPosInf, std::move(comps));
        maps[static_cast<std::size_t>(entries[e].n - c.lo())].at(entries[e].i, entries[e].j) = val;
    }
    Certificate cert;
    cert.direction = Certificate::Direction::plus;
    cert.truncation = truncation;
    cert.lo = c.lo();
    cert.maps = std::move(maps);
    auto check = contraction_verify(c, cert);
    if (!check.ok) return std::nullopt;  // solution did not certify; inconclusive by design
    return cert;
}

}  // namespace grnov
