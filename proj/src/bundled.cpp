#include "grnov/bundled.hpp"

#include <stdexcept>

namespace grnov {

RingPtr bundled_laurent(const Field& f) { return Ring::make_laurent(f); }

RingPtr bundled_twisted(const Field& f) {
    // R_0 = K x K with basis idempotents, automorphism swaps the factors
    auto s0 = Scalar::zero(f), s1 = Scalar::one(f);
    std::vector<std::vector<std::vector<Scalar>>> strc = {
        {{s1, s0}, {s0, s0}},
        {{s0, s0}, {s0, s1}},
    };
    std::vector<std::vector<Scalar>> aut = {{s0, s1}, {s1, s0}};
    return Ring::make_twisted(f, 2, {s1, s1}, std::move(strc), std::move(aut));
}

namespace {
MultiPoly mono4(const Field& f, long long coeff, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                std::uint32_t d) {
    return MultiPoly::monomial(Monomial{a, b, c, d}, Scalar::from_int(f, coeff));
}
}  // namespace

RingPtr bundled_abcd(const Field& f) {
    MultiPoly rel = mono4(f, 1, 1, 1, 0, 0) + mono4(f, 1, 0, 0, 1, 1) + mono4(f, -1, 0, 0, 0, 0);
    RingPtr shape = Ring::make_graded_quotient_unvalidated(f, {"A", "B", "C", "D"}, {1, -1, 1, -1},
                                                           {rel});
    Homog A = shape->h_from_poly(1, mono4(f, 1, 1, 0, 0, 0));
    Homog B = shape->h_from_poly(-1, mono4(f, 1, 0, 1, 0, 0));
    Homog C = shape->h_from_poly(1, mono4(f, 1, 0, 0, 1, 0));
    Homog D = shape->h_from_poly(-1, mono4(f, 1, 0, 0, 0, 1));
    Partition plus{1, {PartitionPair{A, B}, PartitionPair{C, D}}};
    Partition minus{-1, {PartitionPair{B, A}, PartitionPair{D, C}}};
    return Ring::make_graded_quotient(f, {"A", "B", "C", "D"}, {1, -1, 1, -1}, {rel},
                                      std::move(plus), std::move(minus));
}

FreeComplex bundled_paper_complex(const Field& f) {
    RingPtr ring = bundled_abcd(f);
    GradedScalar one = GradedScalar::one(ring);
    GradedScalar A = GradedScalar::from_homog(ring, ring->h_from_poly(1, mono4(f, 1, 1, 0, 0, 0)));
    GradedScalar B = GradedScalar::from_homog(ring, ring->h_from_poly(-1, mono4(f, 1, 0, 1, 0, 0)));
    GradedScalar oneA = one - A;
    GradedScalar oneB = one - B;
    GsMatrix d1 = gs_zero_matrix(ring, 1, 2);
    d1.at(0, 0) = oneB;
    d1.at(0, 1) = -oneA;
    GsMatrix d2 = gs_zero_matrix(ring, 2, 1);
    d2.at(0, 0) = oneA;
    d2.at(1, 0) = oneB;
    return FreeComplex(ring, 0, {1, 2, 1}, {d1, d2});
}

FreeComplex bundled_tminus2(const Field& f) {
    RingPtr ring = bundled_laurent(f);
    GradedScalar tm2(ring);
    tm2.add_component(ring->h_from_coeff(1, Scalar::one(f)));
    tm2.add_component(ring->h_from_coeff(0, Scalar::from_int(f, -2)));
    GsMatrix d1 = gs_zero_matrix(ring, 1, 1);
    d1.at(0, 0) = tm2;
    return FreeComplex(ring, 0, {1, 1}, {d1});
}

Certificate bundled_paper_certificate(const RingPtr& abcd, Certificate::Direction dir,
                                      long truncation) {
    const Field& f = abcd->field();
    if (dir == Certificate::Direction::minus) {
        // invert 1-B over the reversed grading, where B raises degree
        RingPtr rev = abcd->reversed();
        long hi = truncation + 1;  // margin: the differentials reach one degree down
        std::map<int, Homog> comps;
        for (long j = 0; j <= hi; ++j)
            comps.emplace(static_cast<int>(j),
                          rev->h_from_poly(static_cast<int>(j),
                                           mono4(f, 1, 0, static_cast<std::uint32_t>(j), 0, 0)));
        TruncNov y = TruncNov::from_components(rev, 0, hi, std::move(comps));
        Certificate cert;
        cert.direction = Certificate::Direction::minus;
        cert.truncation = truncation;
        cert.lo = 0;
        NovMatrix s0 = nov_zero_matrix(rev, 2, 1);
        s0.at(0, 0) = y;
        NovMatrix s1 = nov_zero_matrix(rev, 1, 2);
        s1.at(0, 1) = y;
        cert.maps = {s0, s1};
        return cert;
    }
    long hi = truncation + 1;
    std::map<int, Homog> comps;
    for (long j = 0; j <= hi; ++j)
        comps.emplace(static_cast<int>(j),
                      abcd->h_from_poly(static_cast<int>(j),
                                        mono4(f, 1, static_cast<std::uint32_t>(j), 0, 0, 0)));
    TruncNov x = TruncNov::from_components(abcd, 0, hi, std::move(comps));
    Certificate cert;
    cert.direction = Certificate::Direction::plus;
    cert.truncation = truncation;
    cert.lo = 0;
    NovMatrix s0 = nov_zero_matrix(abcd, 2, 1);
    s0.at(1, 0) = -x;
    NovMatrix s1 = nov_zero_matrix(abcd, 1, 2);
    s1.at(0, 0) = x;
    cert.maps = {s0, s1};
    return cert;
}

DominationData bundled_evaluation_domination(const Field& f, int wlo, int whi) {
    if (wlo > -1 || whi < 1) throw std::invalid_argument("evaluation data needs wlo <= -1 <= 1 <= whi");
    DominationData data;
    data.C = bundled_tminus2(f);
    const RingPtr& ring = data.C.ring();
    data.wlo = wlo;
    data.whi = whi;
    data.D = R0Complex(ring, 0, {{R0Summand{0, 0}}}, {});

    auto pow2 = [&](long k) {  // 2^k in K, k possibly negative
        Scalar two = Scalar::from_int(f, 2);
        Scalar r = Scalar::one(f);
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * two;
        return k >= 0 ? r : r.inverse();
    };

    SlotSpace sp = data.slot_space(0);
    GsMatrix alpha0 = gs_zero_matrix(ring, 1, sp.size());
    for (int k = wlo; k <= whi; ++k)
        alpha0.at(0, sp.index(0, k)) = GradedScalar::from_homog(ring, ring->h_from_coeff(-k, pow2(k)));
    data.alpha[0] = std::move(alpha0);
    data.alpha[1] = gs_zero_matrix(ring, 0, data.slot_space(1).size());

    GsMatrix beta0 = gs_zero_matrix(ring, sp.size(), 1);
    beta0.at(sp.index(0, 0), 0) = GradedScalar::one(ring);
    data.beta[0] = std::move(beta0);
    data.beta[1] = gs_zero_matrix(ring, data.slot_space(1).size(), 0);

    // H : C_0 -> C_1 with dH + Hd = id - beta alpha; H(t^k) = (t^k - 2^k)/(t-2)
    SlotSpace sp1 = data.slot_space(1);
    GsMatrix h0 = gs_zero_matrix(ring, sp1.size(), sp.size());
    for (int k = wlo; k <= whi; ++k) {
        if (k >= 1) {
            for (int kk = 0; kk <= k - 1; ++kk)
                h0.at(sp1.index(0, kk), sp.index(0, k)) =
                    GradedScalar::from_homog(ring, ring->h_from_coeff(kk - k, pow2(k - 1 - kk)));
        } else if (k <= -1) {
            for (int kk = k; kk <= -1; ++kk)
                h0.at(sp1.index(0, kk), sp.index(0, k)) =
                    GradedScalar::from_homog(ring, ring->h_from_coeff(kk - k, -pow2(k - 1 - kk)));
        }
    }
    data.homotopy[0] = std::move(h0);
    data.homotopy[1] = gs_zero_matrix(ring, 0, sp1.size());
    return data;
}

DominationData bundled_identity_domination(const FreeComplex& c, int wlo, int whi) {
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        auto r = degree_range(c.diff_at(n));
        if (r && (r->first != 0 || r->second != 0))
            throw std::invalid_argument(
                "identity domination data needs differentials concentrated in degree 0");
    }
    DominationData data;
    data.C = c;
    const RingPtr& ring = c.ring();
    data.wlo = wlo;
    data.whi = whi;
    // D spans slot degrees [wlo+1, whi]; the bottom slot row is routing berm
    std::vector<std::vector<R0Summand>> levels;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::vector<R0Summand> lvl;
        for (int i = 0; i < c.rank_at(n); ++i)
            for (int k = wlo + 1; k <= whi; ++k) lvl.push_back(R0Summand{i, k});
        levels.push_back(std::move(lvl));
    }
    std::vector<GsMatrix> diffs;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        const auto& src = levels[static_cast<std::size_t>(n - c.lo())];
        const auto& dst = levels[static_cast<std::size_t>(n - 1 - c.lo())];
        GsMatrix d = c.diff_at(n);
        GsMatrix m = gs_zero_matrix(ring, static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < dst.size(); ++i)
                if (dst[i].degree == src[j].degree) m.at(static_cast<int>(i), static_cast<int>(j)) =
                    d.at(dst[i].gen, src[j].gen);
        diffs.push_back(std::move(m));
    }
    data.D = R0Complex(ring, c.lo(), levels, std::move(diffs));
    for (int n = c.lo(); n <= c.hi(); ++n) {
        SlotSpace sp = data.slot_space(n);
        const auto& lvl = levels[static_cast<std::size_t>(n - c.lo())];
        GsMatrix a = gs_zero_matrix(ring, static_cast<int>(lvl.size()), sp.size());
        GsMatrix b = gs_zero_matrix(ring, sp.size(), static_cast<int>(lvl.size()));
        for (std::size_t s = 0; s < lvl.size(); ++s) {
            int idx = sp.index(lvl[s].gen, lvl[s].degree);
            a.at(static_cast<int>(s), idx) = GradedScalar::one(ring);
            b.at(idx, static_cast<int>(s)) = GradedScalar::one(ring);
        }
        data.alpha[n] = std::move(a);
        data.beta[n] = std::move(b);
    }
    return data;
}

}  // namespace grnov
