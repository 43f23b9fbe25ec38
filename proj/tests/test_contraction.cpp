#include <doctest.h>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"
#include "grnov/laurent_homology.hpp"

using namespace grnov;

TEST_CASE("paper-example certificates verify at truncation 8") {
    FreeComplex c = bundled_paper_complex(Field::Q());
    Certificate plus = bundled_paper_certificate(c.ring(), Certificate::Direction::plus, 8);
    auto vp = contraction_verify(c, plus);
    CHECK_MESSAGE(vp.ok, vp.message);
    Certificate minus = bundled_paper_certificate(c.ring(), Certificate::Direction::minus, 8);
    auto vm = contraction_verify(c, minus);
    CHECK_MESSAGE(vm.ok, vm.message);
}

TEST_CASE("a perturbed certificate entry fails verification at that entry") {
    FreeComplex c = bundled_paper_complex(Field::Q());
    Certificate cert = bundled_paper_certificate(c.ring(), Certificate::Direction::plus, 8);
    // add +1 to one entry
    const RingPtr& r = c.ring();
    NovMatrix& m = cert.maps[0];
    m.at(0, 0) = m.at(0, 0) + TruncNov::from_graded(GradedScalar::one(r));
    auto res = contraction_verify(c, cert);
    CHECK_FALSE(res.ok);
}

TEST_CASE("empty complex verifies trivially") {
    RingPtr r = bundled_laurent(Field::Q());
    FreeComplex c(r, 0, {}, {});
    Certificate cert;
    cert.truncation = 8;
    cert.lo = 0;
    CHECK(contraction_verify(c, cert).ok);
}

TEST_CASE("contraction search over the Laurent ring") {
    FreeComplex c = bundled_tminus2(Field::Q());
    auto found = contraction_search(c, Certificate::Direction::plus, 6,
                                    contraction_default_window_lo(c, 6));
    REQUIRE(found.has_value());
    CHECK(contraction_verify(c, *found).ok);
    // s contains the geometric series -(1/2) sum (t/2)^k
    const RingPtr& r = c.ring();
    const TruncNov& s00 = found->maps[0].at(0, 0);
    CHECK(r->h_eq(s00.component(0), r->h_from_coeff(0, Scalar::from_string(r->field(), "-1/2"))));
    CHECK(r->h_eq(s00.component(1), r->h_from_coeff(1, Scalar::from_string(r->field(), "-1/4"))));

    auto found_minus = contraction_search(c, Certificate::Direction::minus, 6,
                                          contraction_default_window_lo(c, 6));
    REQUIRE(found_minus.has_value());
    CHECK(contraction_verify(c, *found_minus).ok);

    // [0 -> R -> 0] is never certified and decide refutes it
    FreeComplex single(r, 0, {1}, {});
    CHECK_FALSE(contraction_search(single, Certificate::Direction::plus, 6, -10).has_value());
    CHECK(laurent_novikov_decide(single).plus == NovikovVerdict::not_acyclic);

    // gating: the ABCD ring has no component-finite search
    FreeComplex pc = bundled_paper_complex(Field::Q());
    CHECK_THROWS_AS(contraction_search(pc, Certificate::Direction::plus, 4, -8),
                    std::invalid_argument);
}

TEST_CASE("search over the twisted Laurent ring") {
    RingPtr r = bundled_twisted(Field::Q());
    // [R ->(s - 2) R]: s - 2 has inverse series in both directions
    GradedScalar sm2(r);
    sm2.add_component(r->h_from_coords(1, {Scalar::one(r->field()), Scalar::one(r->field())}));
    sm2.add_component(r->h_from_coords(0, {Scalar::from_int(r->field(), -2), Scalar::from_int(r->field(), -2)}));
    GsMatrix d = gs_zero_matrix(r, 1, 1);
    d.at(0, 0) = sm2;
    FreeComplex c(r, 0, {1, 1}, {d});
    REQUIRE(validate_complex(c).ok);
    auto found = contraction_search(c, Certificate::Direction::plus, 5,
                                    contraction_default_window_lo(c, 5));
    REQUIRE(found.has_value());
    CHECK(contraction_verify(c, *found).ok);
}

TEST_CASE("contraction_from_domination on the evaluation data") {
    DominationData data = bundled_evaluation_domination(Field::Q(), -14, 14);
    Certificate cert = contraction_from_domination(data, Certificate::Direction::plus, 8);
    CHECK(contraction_verify(data.C, cert).ok);
    Certificate certm = contraction_from_domination(data, Certificate::Direction::minus, 8);
    CHECK(contraction_verify(data.C, certm).ok);
}

TEST_CASE("contraction_from_domination: zero complex gives the empty certificate") {
    RingPtr r = bundled_laurent(Field::Q());
    DominationData data;
    data.C = FreeComplex(r, 0, {}, {});
    data.D = R0Complex(r, 0, {}, {});
    data.wlo = -4;
    data.whi = 4;
    Certificate cert = contraction_from_domination(data, Certificate::Direction::plus, 6);
    CHECK(cert.maps.empty());
    CHECK(contraction_verify(data.C, cert).ok);
}

TEST_CASE("contraction_from_domination: D = 0 with H contracting C") {
    // C = [R ->1 R]: H = d^{-1} on the right level contracts C itself
    RingPtr r = bundled_laurent(Field::Q());
    GsMatrix d = gs_identity_matrix(r, 1);
    FreeComplex c(r, 0, {1, 1}, {d});
    DominationData data;
    data.C = c;
    data.D = R0Complex(r, 0, {{}, {}}, {gs_zero_matrix(r, 0, 0)});
    data.wlo = -6;
    data.whi = 6;
    SlotSpace sp0 = data.slot_space(0);
    SlotSpace sp1 = data.slot_space(1);
    GsMatrix h0 = gs_zero_matrix(r, sp1.size(), sp0.size());
    for (int k = data.wlo; k <= data.whi; ++k)
        h0.at(sp1.index(0, k), sp0.index(0, k)) = GradedScalar::one(r);
    data.homotopy[0] = std::move(h0);
    data.homotopy[1] = gs_zero_matrix(r, 0, sp1.size());
    data.alpha[0] = gs_zero_matrix(r, 0, sp0.size());
    data.alpha[1] = gs_zero_matrix(r, 0, sp1.size());
    data.beta[0] = gs_zero_matrix(r, sp0.size(), 0);
    data.beta[1] = gs_zero_matrix(r, sp1.size(), 0);
    auto res = domination_validate(data);
    REQUIRE_MESSAGE(res.ok, res.message);
    Certificate cert = contraction_from_domination(data, Certificate::Direction::plus, 6);
    CHECK(contraction_verify(c, cert).ok);
}

TEST_CASE("search agrees with decide on seeded random complexes") {
    RingPtr r = bundled_laurent(Field::Q());
    Rng rng(99);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        FreeComplex c = random_laurent_complex(r, rng, 3, 2, -2, 2);
        auto decide = laurent_novikov_decide(c);
        int wlo = contraction_default_window_lo(c, 5);
        auto plus = contraction_search(c, Certificate::Direction::plus, 5, wlo);
        auto minus = contraction_search(c, Certificate::Direction::minus, 5, wlo);
        bool both = plus.has_value() && minus.has_value();
        CHECK(both == (decide.plus == NovikovVerdict::acyclic));
        ++checked;
    }
    CHECK(checked == 12);
}

TEST_CASE("contraction_from_domination with a contractible summand and a D-side homotopy") {
    // D = (evaluation target) (+) a contractible pair [Q ->1 Q]; alpha.beta is
    // then a proper idempotent and the column contraction needs G
    DominationData data = bundled_evaluation_domination(Field::Q(), -14, 14);
    const RingPtr& r = data.C.ring();
    R0Complex d2(r, 0, {{R0Summand{0, 0}, R0Summand{9, 0}}, {R0Summand{9, 0}}},
                 {[&] {
                     GsMatrix m = gs_zero_matrix(r, 2, 1);
                     m.at(1, 0) = GradedScalar::one(r);
                     return m;
                 }()});
    DominationData aug;
    aug.C = data.C;
    aug.D = d2;
    aug.wlo = data.wlo;
    aug.whi = data.whi;
    SlotSpace sp0 = aug.slot_space(0), sp1 = aug.slot_space(1);
    // alpha: evaluation into the first summand, nothing into the extras
    GsMatrix a0 = gs_zero_matrix(r, 2, sp0.size());
    for (int j = 0; j < sp0.size(); ++j) a0.at(0, j) = data.alpha_at(0).at(0, j);
    aug.alpha[0] = std::move(a0);
    aug.alpha[1] = gs_zero_matrix(r, 1, sp1.size());
    GsMatrix b0 = gs_zero_matrix(r, sp0.size(), 2);
    for (int i = 0; i < sp0.size(); ++i) b0.at(i, 0) = data.beta_at(0).at(i, 0);
    aug.beta[0] = std::move(b0);
    aug.beta[1] = gs_zero_matrix(r, sp1.size(), 1);
    aug.homotopy = data.homotopy;
    // G contracts the extra pair and commutes with alpha.beta
    GsMatrix g0 = gs_zero_matrix(r, 1, 2);
    g0.at(0, 1) = GradedScalar::one(r);
    aug.d_homotopy[0] = std::move(g0);
    aug.d_homotopy[1] = gs_zero_matrix(r, 0, 1);

    auto ok = domination_validate(aug);
    REQUIRE_MESSAGE(ok.ok, ok.message);
    Bicomplex e = bicomplex_build(aug, -5, 5);
    CHECK(bicomplex_check(e).ok);
    auto cmp = tot_vs_cone(e, 0, 2);
    CHECK_MESSAGE(cmp.equal, cmp.message);
    for (auto dir : {Certificate::Direction::plus, Certificate::Direction::minus}) {
        Certificate cert = contraction_from_domination(aug, dir, 7);
        CHECK(contraction_verify(aug.C, cert).ok);
    }
}
