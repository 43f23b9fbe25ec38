// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and sample counts are fixed here, not configurable.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"
#include "grnov/io.hpp"
#include "grnov/laurent_homology.hpp"

using namespace grnov;
using Clock = std::chrono::steady_clock;

namespace {
int g_failures = 0;

void outcome(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<RingPtr> suite_rings(const Field& f) {
    return {bundled_laurent(f), bundled_twisted(f), bundled_abcd(f)};
}

// criterion 1: the four identity suites, >= 200 seeded samples, Q and F_101,
// all three ring variants, zero failures, under 60 seconds
void criterion1() {
    auto t0 = Clock::now();
    const int samples = 200;
    std::string detail;
    bool pass = true;
    for (const Field& f : {Field::Q(), Field::Fp(101)}) {
        for (const RingPtr& ring : suite_rings(f)) {
            auto reports = run_identity_suites(ring, "all", 20260808, samples);
            for (const auto& rep : reports) {
                if (!rep.pass) {
                    pass = false;
                    detail = rep.suite + " over " + f.to_string() + ": " + rep.failure;
                }
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        pass = false;
        detail = "runtime " + std::to_string(dt) + "s exceeds 60s";
    }
    outcome(1, "identity suites (resolution, windows, series, adjoints), 200 samples, Q and F101", pass, detail);
}

// criterion 2: derive_partition verifies for |n| <= 6 on all rings; the ABCD
// partition of type (2,-2) is exactly the four tuple pairs and sums to 1
void criterion2() {
    bool pass = true;
    std::string detail;
    for (const Field& f : {Field::Q(), Field::Fp(101)}) {
        for (const RingPtr& ring : suite_rings(f)) {
            for (int n = -6; n <= 6 && pass; ++n) {
                auto res = verify_partition(*ring, derive_partition(*ring, n));
                if (!res.ok) {
                    pass = false;
                    detail = "n=" + std::to_string(n) + " over " + f.to_string() + ": " + res.message;
                }
            }
        }
    }
    RingPtr abcd = bundled_abcd(Field::Q());
    Partition p2 = derive_partition(*abcd, 2);
    if (p2.pairs.size() != 4) {
        pass = false;
        detail = "ABCD n=2 has " + std::to_string(p2.pairs.size()) + " pairs";
    } else {
        Homog sum = abcd->h_zero(0);
        for (const auto& pr : p2.pairs) sum = abcd->h_add(sum, abcd->h_mul(pr.u, pr.v));
        if (!abcd->h_eq(sum, abcd->h_one())) {
            pass = false;
            detail = "ABCD n=2 tuple products do not sum to 1";
        }
    }
    outcome(2, "partition powers verify for |n| <= 6; ABCD n=2 gives the 4 tuple pairs", pass, detail);
}

// criterion 3: paper example end to end under 120 seconds
void criterion3() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    FreeComplex c = bundled_paper_complex(Field::Q());
    auto valid = validate_complex(c);
    if (!valid.ok) {
        pass = false;
        detail = valid.message;
    }
    for (auto dir : {Certificate::Direction::plus, Certificate::Direction::minus}) {
        Certificate cert = bundled_paper_certificate(c.ring(), dir, 8);
        auto res = contraction_verify(c, cert);
        if (!res.ok) {
            pass = false;
            detail = std::string(dir == Certificate::Direction::plus ? "plus" : "minus") +
                     " certificate: " + res.message;
        }
    }
    SheafComplex s = extend_to_sheaf(c);
    if (!(s.window_at(2) == std::pair<int, int>{0, 0} && s.window_at(1) == std::pair<int, int>{1, 1} &&
          s.window_at(0) == std::pair<int, int>{2, 2})) {
        pass = false;
        detail = "witness windows are not (0,0), (1,1), (2,2)";
    }
    R0Complex w = h0_witness(s);
    auto wr = r0_validate(w);
    if (!wr.ok) {
        pass = false;
        detail = "witness: " + wr.message;
    }
    double dt = seconds_since(t0);
    if (dt >= 120.0) {
        pass = false;
        detail = "runtime " + std::to_string(dt) + "s exceeds 120s";
    }
    outcome(3, "paper example: geometric-series certificates at T=8 and the witness windows", pass,
            detail);
}

// criterion 4: search (both directions, T=6) agrees with the exact decision on
// 50 seeded random complexes; on acyclic instances the witness Betti numbers
// equal the K-dimensions of the homology
void criterion4() {
    bool agreement_pass = true;
    bool betti_equal_pass = true;
    bool betti_retract_pass = true;  // dim H_n(C) <= witness Betti_n always
    std::string detail;
    std::string betti_detail;
    RingPtr ring = bundled_laurent(Field::Q());
    Rng rng(424242);
    const long T = 6;
    int acyclic_count = 0;
    for (int i = 0; i < 50; ++i) {
        FreeComplex c = random_laurent_complex(ring, rng, 3, 3, -2, 2);
        auto decide = laurent_novikov_decide(c);
        bool oracle = decide.plus == NovikovVerdict::acyclic;
        bool found_both = true;
        for (auto dir : {Certificate::Direction::plus, Certificate::Direction::minus}) {
            int wlo = contraction_default_window_lo(c, T);
            std::optional<Certificate> cert;
            for (int attempt = 0; attempt < 3 && !cert; ++attempt) {
                cert = contraction_search(c, dir, T, wlo);
                wlo *= 2;
            }
            if (!cert) {
                found_both = false;
            } else {
                auto res = contraction_verify(c, *cert);
                if (!res.ok) {
                    agreement_pass = false;
                    detail = "instance " + std::to_string(i) + ": emitted certificate fails: " + res.message;
                }
            }
        }
        if (found_both != oracle) {
            agreement_pass = false;
            detail = "instance " + std::to_string(i) + ": search " +
                     (found_both ? "succeeded" : "failed") + " but decide says " +
                     (oracle ? "acyclic" : "not acyclic");
        }
        if (oracle) {
            ++acyclic_count;
            auto dims = laurent_homology(c).k_dimensions();
            auto betti = r0_betti(h0_witness(extend_to_sheaf(c)));
            for (int n = c.lo(); n <= c.hi(); ++n) {
                long want = dims.count(n) ? dims[n] : 0;
                long got = betti.count(n) ? betti[n] : 0;
                if (want > got) betti_retract_pass = false;
                if (want != got && betti_equal_pass) {
                    betti_equal_pass = false;
                    betti_detail = "instance " + std::to_string(i) + ": witness Betti " +
                                   std::to_string(got) + " != homology dimension " +
                                   std::to_string(want) + " at index " + std::to_string(n) +
                                   " (the complex retracts onto the witness homology, which is "
                                   "strictly larger here; shared per-level windows cannot avoid "
                                   "this when one level mixes strictly degree-raising and "
                                   "degree-lowering columns)";
                }
            }
        }
    }
    bool pass = agreement_pass && betti_equal_pass;
    std::string msg = "Laurent coherence on 50 seeded complexes (" + std::to_string(acyclic_count) +
                      " acyclic): search/decide agreement " + (agreement_pass ? "pass" : "FAIL") +
                      "; witness Betti equality " + (betti_equal_pass ? "pass" : "FAIL") +
                      "; retract inequality dim H(C) <= Betti " +
                      (betti_retract_pass ? "pass" : "FAIL");
    outcome(4, msg, pass, agreement_pass ? betti_detail : detail);
}

// criterion 5: tot(E) vs cone(nu) entrywise, anticommutation, and the slot
// reduction of mu, across the Mather-data suite
void criterion5() {
    bool pass = true;
    std::string detail;
    // evaluation data over Q and F101
    for (const Field& f : {Field::Q(), Field::Fp(101)}) {
        DominationData data = bundled_evaluation_domination(f, -8, 8);
        Bicomplex e = bicomplex_build(data, -6, 6);
        auto chk = bicomplex_check(e);
        if (!chk.ok) {
            pass = false;
            detail = "evaluation data over " + f.to_string() + ": " + chk.message;
        }
        auto cmp = tot_vs_cone(e, 0, 2);
        if (!cmp.equal) {
            pass = false;
            detail = "evaluation data over " + f.to_string() + ": " + cmp.message;
        }
        auto cmp2 = totrt_vs_cone_novikov(e, 0, 2, 6);
        if (!cmp2.equal) {
            pass = false;
            detail = "truncated totalisation over " + f.to_string() + ": " + cmp2.message;
        }
    }
    // identity data on degree-zero complexes (all three rings)
    for (const RingPtr& ring : suite_rings(Field::Q())) {
        GsMatrix d = gs_zero_matrix(ring, 1, 1);
        d.at(0, 0) = gs_int(ring, 3);
        FreeComplex c(ring, 0, {1, 1}, {d});
        DominationData data = bundled_identity_domination(c, -4, 4);
        Bicomplex e = bicomplex_build(data, -3, 3);
        auto chk = bicomplex_check(e);
        auto cmp = tot_vs_cone(e, 0, 2);
        if (!chk.ok || !cmp.equal) {
            pass = false;
            detail = "identity data: " + (chk.ok ? cmp.message : chk.message);
        }
    }
    // mu equals identity minus shift on sampled inputs, all three rings
    for (const Field& f : {Field::Q(), Field::Fp(101)}) {
        for (const RingPtr& ring : suite_rings(f)) {
            Rng rng(515151);
            for (int i = 0; i < 25; ++i) {
                Induced x = random_induced(ring, rng, 2, -2, 2, 3);
                if (!(mu_apply(x) == mu_shift_form(x))) {
                    pass = false;
                    detail = "mu != id - shift over " + f.to_string();
                }
            }
        }
    }
    outcome(5, "structural equalities: tot(E) = cone(nu), anticommutation, mu = id - shift", pass,
            detail);
}

// criterion 6: negative controls
void criterion6() {
    bool pass = true;
    std::string detail;
    RingPtr ring = bundled_laurent(Field::Q());
    FreeComplex single(ring, 0, {1}, {});
    if (laurent_novikov_decide(single).plus != NovikovVerdict::not_acyclic) {
        pass = false;
        detail = "[0 -> R -> 0] not refuted by decide";
    }
    for (long T : {2L, 4L, 6L}) {
        if (contraction_search(single, Certificate::Direction::plus, T,
                               contraction_default_window_lo(single, T))) {
            pass = false;
            detail = "[0 -> R -> 0] wrongly certified at T=" + std::to_string(T);
        }
    }
    // every mutation of the paper certificates must fail verification
    FreeComplex paper = bundled_paper_complex(Field::Q());
    const RingPtr& abcd = paper.ring();
    int mutations = 0, caught = 0;
    for (auto dir : {Certificate::Direction::plus, Certificate::Direction::minus}) {
        Certificate base = bundled_paper_certificate(abcd, dir, 8);
        for (int mode = 0; mode < 3; ++mode) {
            for (std::size_t mi = 0; mi < base.maps.size(); ++mi) {
                Certificate mut = base;
                NovMatrix& m = mut.maps[mi];
                bool changed = false;
                for (int a = 0; a < m.rows() && !changed; ++a)
                    for (int b = 0; b < m.cols() && !changed; ++b) {
                        TruncNov entry = m.at(a, b);
                        if (mode == 0) {
                            // +1 on an entry (also turns zero entries nonzero)
                            m.at(a, b) = entry + TruncNov::from_graded(GradedScalar::one(abcd));
                            changed = true;
                        } else if (mode == 1 && !entry.components().empty()) {
                            // sign flip
                            m.at(a, b) = -entry;
                            changed = true;
                        } else if (mode == 2 && entry.components().size() > 1) {
                            // drop the lowest stored component but keep the claim
                            std::map<int, Homog> comps = entry.components();
                            comps.erase(comps.begin());
                            m.at(a, b) = TruncNov::from_components(abcd, entry.lo(), entry.hi(),
                                                                   std::move(comps));
                            changed = true;
                        }
                    }
                if (!changed) continue;
                ++mutations;
                if (!contraction_verify(paper, mut).ok) ++caught;
            }
        }
    }
    if (mutations == 0 || caught != mutations) {
        pass = false;
        detail = std::to_string(caught) + "/" + std::to_string(mutations) + " mutations caught";
    }
    outcome(6, "negative controls: refutation of [0 -> R -> 0], corrupted certificates fail", pass,
            detail);
}
}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << seconds_since(t0) << "s total)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
