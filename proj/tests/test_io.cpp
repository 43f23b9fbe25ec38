#include <doctest.h>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"
#include "grnov/io.hpp"

#include <atomic>
#include <thread>

using namespace grnov;

TEST_CASE("ring documents round-trip bit-identically") {
    for (const RingPtr& r :
         {bundled_laurent(Field::Q()), bundled_twisted(Field::Fp(101)), bundled_abcd(Field::Q())}) {
        Json j = ring_to_json(*r);
        RingPtr back = ring_from_json(j);
        CHECK(back->same(*r));
        CHECK(ring_to_json(*back).dump() == j.dump());
    }
}

TEST_CASE("complex documents round-trip and validate on load") {
    FreeComplex c = bundled_paper_complex(Field::Q());
    Json j = complex_to_json(c);
    FreeComplex back = complex_from_json(j);
    CHECK(back.ring()->same(*c.ring()));
    CHECK(back.ranks() == c.ranks());
    for (int n = c.lo() + 1; n <= c.hi(); ++n) CHECK(mat_eq(back.diff_at(n), c.diff_at(n)));
    CHECK(complex_to_json(back).dump() == j.dump());

    // a tampered differential is rejected at load
    Json bad = j;
    bad["diffs"]["1"][0][1] = bad["diffs"]["1"][0][0];
    CHECK_THROWS_AS(complex_from_json(bad), IoError);
}

TEST_CASE("certificate documents round-trip; reload verifies like the original") {
    FreeComplex c = bundled_paper_complex(Field::Q());
    for (auto dir : {Certificate::Direction::plus, Certificate::Direction::minus}) {
        Certificate cert = bundled_paper_certificate(c.ring(), dir, 8);
        Json j = certificate_to_json(cert);
        Certificate back = certificate_from_json(c.ring(), j);
        CHECK(certificate_to_json(back).dump() == j.dump());
        CHECK(contraction_verify(c, cert).ok == contraction_verify(c, back).ok);
        CHECK(contraction_verify(c, back).ok);
    }
}

TEST_CASE("witness documents round-trip") {
    FreeComplex c = bundled_tminus2(Field::Q());
    SheafComplex s = extend_to_sheaf(c);
    R0Complex w = h0_witness(s);
    auto betti = r0_betti(w);
    Json j = witness_to_json(s, w, &betti);
    WitnessDocument doc = witness_from_json(c.ring(), j);
    CHECK(doc.windows.at(1) == std::pair<int, int>{0, 0});
    CHECK(doc.windows.at(0) == std::pair<int, int>{1, 0});
    CHECK(doc.has_betti);
    CHECK(doc.betti.at(0) == 1);
    CHECK(r0_validate(doc.complex).ok);
    Json j2 = witness_to_json(s, doc.complex, &doc.betti);
    CHECK(j2.dump() == j.dump());
}

TEST_CASE("malformed documents raise IoError") {
    CHECK_THROWS_AS(parse_json_text("{ truncated"), IoError);
    CHECK_THROWS_AS(ring_from_json(parse_json_text("{}")), IoError);
    CHECK_THROWS_AS(ring_from_json(parse_json_text(R"({"schema":"grnov.ring/1","kind":"laurent"})")),
                    IoError);
    // a graded_quotient ring with a bad partition must not load
    RingPtr abcd = bundled_abcd(Field::Q());
    Json j = ring_to_json(*abcd);
    j["partitions"]["plus"] = Json::array({j["partitions"]["plus"][0]});  // only (A, B)
    CHECK_THROWS_AS(ring_from_json(j), IoError);
    // inhomogeneous relations must not load
    Json j2 = ring_to_json(*abcd);
    j2["graded_quotient"]["relations"][0].push_back(
        Json{{"coeff", "1"}, {"exps", Json::array({1, 0, 0, 0})}});
    CHECK_THROWS_AS(ring_from_json(j2), IoError);
}

TEST_CASE("bundled data files parse and match the built-in objects") {
    std::string dir = GRNOV_DATA_DIR;
    RingPtr abcd = ring_from_json(parse_json_text(read_text_file(dir + "/abcd.ring.json")));
    CHECK(abcd->same(*bundled_abcd(Field::Q())));
    FreeComplex paper = complex_from_json(parse_json_text(read_text_file(dir + "/paper.complex.json")));
    FreeComplex expect = bundled_paper_complex(Field::Q());
    for (int n = 1; n <= 2; ++n) CHECK(mat_eq(paper.diff_at(n), expect.diff_at(n)));
    Certificate plus = certificate_from_json(
        abcd, parse_json_text(read_text_file(dir + "/paper.cert.plus.json")));
    CHECK(contraction_verify(paper, plus).ok);
    Certificate minus = certificate_from_json(
        abcd, parse_json_text(read_text_file(dir + "/paper.cert.minus.json")));
    CHECK(contraction_verify(paper, minus).ok);
    FreeComplex t2 = complex_from_json(parse_json_text(read_text_file(dir + "/tminus2.complex.json")));
    CHECK(t2.ring()->kind() == Ring::Kind::laurent);
}

TEST_CASE("truncated series serialization: sentinels and windows") {
    RingPtr r = bundled_laurent(Field::Q());
    // exact zero: both bounds unbounded
    TruncNov z = TruncNov::zero(r);
    Json jz = truncnov_to_json(z);
    CHECK(jz.at("lo").is_null());
    CHECK(jz.at("hi").is_null());
    TruncNov zback = truncnov_from_json(r, jz);
    CHECK(zback.is_exact_zero());
    // exact polynomial: finite lo, unbounded hi
    GradedScalar p(r);
    p.add_component(r->h_from_coeff(-2, Scalar::from_int(r->field(), 3)));
    p.add_component(r->h_from_coeff(1, Scalar::one(r->field())));
    TruncNov tp = TruncNov::from_graded(p);
    Json jp = truncnov_to_json(tp);
    CHECK(jp.at("lo").get<long>() == -2);
    CHECK(jp.at("hi").is_null());
    TruncNov pback = truncnov_from_json(r, jp);
    CHECK(pback == tp);
    CHECK(pback.lo() == tp.lo());
    CHECK(pback.hi() == tp.hi());
    // truncated series round-trips its window exactly
    Rng rng(12);
    TruncNov s = random_truncnov(r, rng, -3, 7, 4);
    TruncNov sback = truncnov_from_json(r, truncnov_to_json(s));
    CHECK(sback == s);
    CHECK(sback.lo() == s.lo());
    CHECK(sback.hi() == s.hi());
}

TEST_CASE("identity reports are deterministic across runs") {
    RingPtr r = bundled_twisted(Field::Q());
    auto a = run_identity_suites(r, "all", 99, 40);
    auto b = run_identity_suites(r, "all", 99, 40);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].failure == b[i].failure);
    }
}

TEST_CASE("ring caches are safe under concurrent use") {
    RingPtr r = bundled_abcd(Field::Q());
    std::vector<std::thread> workers;
    std::atomic<int> failures{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            Rng rng(1000 + static_cast<std::uint64_t>(t));
            for (int i = 0; i < 20; ++i) {
                Induced x = random_induced(r, rng, 2, -2, 2, 2);
                if (!(tau_apply(mu_apply(x)) == x)) failures.fetch_add(1);
            }
        });
    for (auto& w : workers) w.join();
    CHECK(failures.load() == 0);
}
