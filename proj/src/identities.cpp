#include "grnov/identities.hpp"

namespace grnov {

Scalar random_scalar(Rng& rng, const Field& f, bool nonzero) {
    long lo = nonzero ? 1 : 0;
    long v = rng.range(lo, 5);
    if (rng.next() & 1) v = -v;
    if (nonzero && v == 0) v = 1;
    return Scalar::from_int(f, v);
}

Homog random_homog(const RingPtr& ring, Rng& rng, int degree) {
    // seed with a scalar multiple of 1, move to the requested degree through a
    // partition element, then mix with a couple of degree-zero products
    Homog h = ring->h_scale(ring->h_one(), random_scalar(rng, ring->field(), true));
    if (degree != 0) {
        const Partition& p = ring->partition(degree);
        const PartitionPair& pr = p.pairs[static_cast<std::size_t>(rng.range(0, static_cast<long>(p.pairs.size()) - 1))];
        h = ring->h_mul(h, pr.u);
    }
    for (int extra = static_cast<int>(rng.range(0, 2)); extra > 0; --extra) {
        const Partition& p1 = ring->partition(1);
        const PartitionPair& a = p1.pairs[static_cast<std::size_t>(rng.range(0, static_cast<long>(p1.pairs.size()) - 1))];
        const PartitionPair& b = p1.pairs[static_cast<std::size_t>(rng.range(0, static_cast<long>(p1.pairs.size()) - 1))];
        Homog mix = ring->h_mul(a.u, b.v);
        if (ring->h_is_zero(mix)) continue;
        h = ring->h_mul(h, mix);
    }
    return h;
}

GradedScalar random_graded(const RingPtr& ring, Rng& rng, int deg_lo, int deg_hi, int max_terms) {
    GradedScalar g(ring);
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int t = 0; t < terms; ++t)
        g.add_component(random_homog(ring, rng, static_cast<int>(rng.range(deg_lo, deg_hi))));
    return g;
}

Induced random_induced(const RingPtr& ring, Rng& rng, int ngens, int k_lo, int k_hi, int max_slots) {
    Induced x(ring);
    int slots = static_cast<int>(rng.range(1, max_slots));
    for (int s = 0; s < slots; ++s) {
        SlotKey key{static_cast<int>(rng.range(0, ngens - 1)), static_cast<int>(rng.range(k_lo, k_hi))};
        x.add_slot(key, random_graded(ring, rng, -2, 2, 2));
    }
    return x;
}

TruncNov random_truncnov(const RingPtr& ring, Rng& rng, long lo, long hi, int max_terms) {
    std::map<int, Homog> comps;
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        int d = static_cast<int>(rng.range(lo, hi));
        Homog h = random_homog(ring, rng, d);
        auto it = comps.find(d);
        if (it == comps.end())
            comps.emplace(d, h);
        else
            it->second = ring->h_add(it->second, h);
    }
    return TruncNov::from_components(ring, lo, hi, std::move(comps));
}

namespace {

std::string sample_tag(const char* what, int i) {
    return std::string(what) + " (sample " + std::to_string(i) + ")";
}

SuiteReport run_resolution(const RingPtr& ring, std::uint64_t seed, int samples) {
    SuiteReport rep{"resolution", samples, true, ""};
    Rng rng(seed ^ 0x5eed5011ull);
    const int ngens = 2;
    for (int i = 0; i < samples && rep.pass; ++i) {
        Induced x = random_induced(ring, rng, ngens, -2, 2, 3);
        // pi mu = 0
        auto pimu = pi_apply(mu_apply(x), ngens);
        for (const auto& g : pimu)
            if (!g.is_zero()) {
                rep.pass = false;
                rep.failure = sample_tag("pi.mu != 0", i);
            }
        if (!rep.pass) break;
        // tau mu = id
        if (!(tau_apply(mu_apply(x)) == x)) {
            rep.pass = false;
            rep.failure = sample_tag("tau.mu != id", i);
            break;
        }
        // mu tau + iota pi = id
        Induced lhs = mu_apply(tau_apply(x)) + iota_apply(ring, pi_apply(x, ngens));
        if (!(lhs == x)) {
            rep.pass = false;
            rep.failure = sample_tag("mu.tau + iota.pi != id", i);
            break;
        }
        // pi iota = id on module elements
        std::vector<GradedScalar> m;
        for (int g = 0; g < ngens; ++g) m.push_back(random_graded(ring, rng, -2, 2, 2));
        auto back = pi_apply(iota_apply(ring, m), ngens);
        for (int g = 0; g < ngens; ++g)
            if (!(back[static_cast<std::size_t>(g)] == m[static_cast<std::size_t>(g)])) {
                rep.pass = false;
                rep.failure = sample_tag("pi.iota != id", i);
            }
        if (!rep.pass) break;
        // mu equals identity minus the left-degree shift
        if (!(mu_apply(x) == mu_shift_form(x))) {
            rep.pass = false;
            rep.failure = sample_tag("mu != id - shift", i);
            break;
        }
        // mu does not depend on the partition: rescale each pair by c, 1/c
        Partition alt = ring->pou_minus();
        for (auto& pr : alt.pairs) {
            Scalar c = random_scalar(rng, ring->field(), true);
            pr.u = ring->h_scale(pr.u, c);
            pr.v = ring->h_scale(pr.v, c.inverse());
        }
        if (!(mu_apply_with(x, alt) == mu_apply(x))) {
            rep.pass = false;
            rep.failure = sample_tag("mu depends on the partition", i);
            break;
        }
    }
    return rep;
}

SuiteReport run_windows(const RingPtr& ring, std::uint64_t seed, int samples) {
    SuiteReport rep{"windows", samples, true, ""};
    Rng rng(seed ^ 0x5eed4062ull);
    for (int q = 0; q <= 3 && rep.pass; ++q)
        for (int p = 0; p <= 3 && rep.pass; ++p)
            for (int i = 0; i < samples && rep.pass; ++i) {
                std::string at = " at (q,p)=(" + std::to_string(q) + "," + std::to_string(p) + ")";
                GradedScalar rdom = random_graded(ring, rng, -p, q, 3);
                if (!(window_rho(q, p, window_delta(q, p, rdom)) == rdom)) {
                    rep.pass = false;
                    rep.failure = sample_tag("rho.delta != id", i) + at;
                    break;
                }
                WindowPair pr{random_graded(ring, rng, q - 3, q, 2),
                             random_graded(ring, rng, -p, -p + 3, 2)};
                GradedScalar mid = window_iota(q, p, pr);
                WindowPair lhs = window_sigma(q, p, mid);
                GradedScalar d = window_rho(q, p, pr);
                WindowPair dd = window_delta(q, p, d);
                lhs.minus_part = lhs.minus_part + dd.minus_part;
                lhs.plus_part = lhs.plus_part + dd.plus_part;
                if (!(lhs.minus_part == pr.minus_part) || !(lhs.plus_part == pr.plus_part)) {
                    rep.pass = false;
                    rep.failure = sample_tag("sigma(-i_q + i_p) + delta.rho != id", i) + at;
                    break;
                }
                GradedScalar r = random_graded(ring, rng, -p - 3, q + 3, 3);
                if (!(window_iota(q, p, window_sigma(q, p, r)) == r)) {
                    rep.pass = false;
                    rep.failure = sample_tag("(-i_q + i_p).sigma != id", i) + at;
                    break;
                }
            }
    return rep;
}

SuiteReport run_series(const RingPtr& ring, std::uint64_t seed, int samples) {
    SuiteReport rep{"series", samples, true, ""};
    Rng rng(seed ^ 0x5eed0e02ull);
    const long T = 8;
    for (int i = 0; i < samples && rep.pass; ++i) {
        GradedScalar rpoly = random_graded(ring, rng, 0, 5, 3);
        if (!(series_kappa(series_delta(rpoly)) == rpoly)) {
            rep.pass = false;
            rep.failure = sample_tag("kappa.delta != id", i);
            break;
        }
        SeriesMiddle x{random_graded(ring, rng, -4, 4, 3), random_truncnov(ring, rng, 0, T, 3)};
        SeriesMiddle lhs = series_lambda(series_rho(x));
        GradedScalar k = series_kappa(x);
        lhs.laurent = lhs.laurent + k;
        lhs.series = lhs.series + TruncNov::from_graded(k);
        if (!(lhs.laurent == x.laurent) || !(lhs.series == x.series)) {
            rep.pass = false;
            rep.failure = sample_tag("lambda.rho + delta.kappa != id", i);
            break;
        }
        TruncNov y = random_truncnov(ring, rng, -3, T, 4);
        if (!(series_rho(series_lambda(y)) == y)) {
            rep.pass = false;
            rep.failure = sample_tag("rho.lambda != id", i);
            break;
        }
    }
    return rep;
}

SuiteReport run_adjoints(const RingPtr& ring, std::uint64_t seed, int samples) {
    SuiteReport rep{"adjoints", samples, true, ""};
    Rng rng(seed ^ 0x5eed0fcdull);
    for (int i = 0; i < samples && rep.pass; ++i) {
        int p = static_cast<int>(rng.range(0, 3));
        GradedScalar r = random_graded(ring, rng, -3, 3, 3);
        if (!(adjoint_alpha(adjoint_beta(ring, p, r)) == r)) {
            rep.pass = false;
            rep.failure = sample_tag("alpha.beta != id", i);
            break;
        }
        GradedScalar left = random_graded(ring, rng, -p, -p + 3, 2);
        GradedScalar right = random_graded(ring, rng, -2, 2, 2);
        PlusTensor x = PlusTensor::pure(ring, p, left, right);
        if (!(adjoint_beta(ring, p, adjoint_alpha(x)) == x)) {
            rep.pass = false;
            rep.failure = sample_tag("beta.alpha != id", i);
            break;
        }
        int q = static_cast<int>(rng.range(0, 3));
        if (!(adjoint_gamma(adjoint_beta_gamma(ring, q, r)) == r)) {
            rep.pass = false;
            rep.failure = sample_tag("gamma-side alpha.beta != id", i);
            break;
        }
        GradedScalar leftg = random_graded(ring, rng, q - 3, q, 2);
        MinusTensor y = MinusTensor::pure(ring, q, leftg, right);
        if (!(adjoint_beta_gamma(ring, q, adjoint_gamma(y)) == y)) {
            rep.pass = false;
            rep.failure = sample_tag("gamma-side beta.alpha != id", i);
            break;
        }
    }
    return rep;
}
}  // namespace

std::vector<SuiteReport> run_identity_suites(const RingPtr& ring, const std::string& suite,
                                             std::uint64_t seed, int samples) {
    std::vector<SuiteReport> out;
    bool all = suite == "all";
    if (all || suite == "resolution") out.push_back(run_resolution(ring, seed, samples));
    if (all || suite == "windows") out.push_back(run_windows(ring, seed, samples));
    if (all || suite == "series") out.push_back(run_series(ring, seed, samples));
    if (all || suite == "adjoints") out.push_back(run_adjoints(ring, seed, samples));
    if (out.empty()) throw std::invalid_argument("unknown identity suite: " + suite);
    return out;
}

FreeComplex random_laurent_complex(const RingPtr& ring, Rng& rng, int levels, int max_rank,
                                   int deg_lo, int deg_hi) {
    // block-diagonal sum of one-term and two-term complexes, then a few
    // elementary basis changes keeping entry degrees within [deg_lo, deg_hi]
    std::vector<int> count(static_cast<std::size_t>(levels), 0);
    struct Pair {
        int level;
        GradedScalar f;
    };
    std::vector<Pair> pairs;
    int nsingles_total = 0;
    int blocks = static_cast<int>(rng.range(1, 3));
    for (int b = 0; b < blocks; ++b) {
        if (rng.next() % 3 == 0) {
            int lvl = static_cast<int>(rng.range(0, levels - 1));
            if (count[static_cast<std::size_t>(lvl)] >= max_rank) continue;
            count[static_cast<std::size_t>(lvl)] += 1;
            ++nsingles_total;
        } else {
            int lvl = static_cast<int>(rng.range(0, levels - 2));
            if (count[static_cast<std::size_t>(lvl)] >= max_rank ||
                count[static_cast<std::size_t>(lvl + 1)] >= max_rank)
                continue;
            count[static_cast<std::size_t>(lvl)] += 1;
            count[static_cast<std::size_t>(lvl + 1)] += 1;
            GradedScalar f = random_graded(ring, rng, std::max(deg_lo, -1), std::min(deg_hi, 1), 2);
            pairs.push_back(Pair{lvl, f});
        }
    }
    std::vector<GsMatrix> diffs;
    for (int n = 1; n < levels; ++n)
        diffs.push_back(gs_zero_matrix(ring, count[static_cast<std::size_t>(n - 1)],
                                       count[static_cast<std::size_t>(n)]));
    // singles occupy the leading slots of each level; pairs fill the rest
    std::vector<int> cursor = count;
    for (const auto& p : pairs) {
        cursor[static_cast<std::size_t>(p.level)] -= 1;
        cursor[static_cast<std::size_t>(p.level + 1)] -= 1;
    }
    (void)nsingles_total;
    for (const auto& p : pairs) {
        int row = cursor[static_cast<std::size_t>(p.level)]++;
        int col = cursor[static_cast<std::size_t>(p.level + 1)]++;
        diffs[static_cast<std::size_t>(p.level)].at(row, col) = p.f;
    }
    FreeComplex c(ring, 0, count, diffs);
    // elementary automorphisms
    int ops = static_cast<int>(rng.range(0, 4));
    for (int o = 0; o < ops; ++o) {
        int n = static_cast<int>(rng.range(0, levels - 1));
        int r = c.rank_at(n);
        if (r < 2) continue;
        int i = static_cast<int>(rng.range(0, r - 1));
        int j = static_cast<int>(rng.range(0, r - 1));
        if (i == j) continue;
        GradedScalar f = random_graded(ring, rng, -1, 1, 1);
        if (f.is_zero()) continue;
        // basis change e_i += e_j * f at level n: columns of d_n combine,
        // rows of d_{n+1} combine inversely
        std::vector<GsMatrix> nd;
        bool ok = true;
        for (int m = 1; m < levels; ++m) {
            GsMatrix d = c.diff_at(m);
            if (m == n) {
                for (int a = 0; a < d.rows(); ++a) d.at(a, i) = d.at(a, i) + d.at(a, j) * f;
            }
            if (m == n + 1) {
                for (int b = 0; b < d.cols(); ++b) d.at(j, b) = d.at(j, b) - f * d.at(i, b);
            }
            auto span = degree_range(d);
            if (span && (span->first < deg_lo || span->second > deg_hi)) ok = false;
            nd.push_back(std::move(d));
        }
        if (!ok) continue;
        c = FreeComplex(ring, 0, c.ranks(), std::move(nd));
    }
    return c;
}

}  // namespace grnov
