#include <doctest.h>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"

using namespace grnov;

namespace {
GradedScalar abcd_var(const RingPtr& r, int which) {
    // 0:A 1:B 2:C 3:D
    Monomial m{0, 0, 0, 0};
    m[static_cast<std::size_t>(which)] = 1;
    int deg = r->var_degrees()[static_cast<std::size_t>(which)];
    return GradedScalar::from_homog(r, r->h_from_poly(deg, MultiPoly::monomial(m, Scalar::one(r->field()))));
}
}  // namespace

TEST_CASE("laurent arithmetic: (t+1)(t-1) = t^2 - 1") {
    RingPtr r = bundled_laurent(Field::Q());
    GradedScalar t = GradedScalar::from_homog(r, r->h_from_coeff(1, Scalar::one(r->field())));
    GradedScalar one = GradedScalar::one(r);
    GradedScalar lhs = (t + one) * (t - one);
    GradedScalar expect = t * t - one;
    CHECK(lhs == expect);
}

TEST_CASE("abcd normal forms") {
    RingPtr r = bundled_abcd(Field::Q());
    GradedScalar A = abcd_var(r, 0), B = abcd_var(r, 1), C = abcd_var(r, 2), D = abcd_var(r, 3);
    GradedScalar one = GradedScalar::one(r);

    // A*B reduces to 1 - CD
    CHECK(A * B == one - C * D);
    // (AB + CD)^2 reduces to 1
    GradedScalar s = A * B + C * D;
    CHECK(s * s == one);
    CHECK(s == one);
    // A^2 B^2 -> 1 - 2CD + C^2 D^2
    GradedScalar lhs = (A * A) * (B * B);
    GradedScalar cd = C * D;
    GradedScalar expect = one - (cd + cd) + cd * cd;
    CHECK(lhs == expect);
    // already reduced stays put
    GradedScalar ac = A + C;
    CHECK(ac * one == ac);
    // normal_form is idempotent and homomorphic on samples
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        GradedScalar p = random_graded(r, rng, -2, 2, 3);
        GradedScalar q = random_graded(r, rng, -2, 2, 3);
        CHECK((p * q) == (p * q) * one);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("mixed-ring operands are rejected") {
    RingPtr q = bundled_laurent(Field::Q());
    RingPtr fp = bundled_laurent(Field::Fp(101));
    GradedScalar a = GradedScalar::one(q);
    GradedScalar b = GradedScalar::one(fp);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("derive_partition: laurent and abcd") {
    RingPtr lau = bundled_laurent(Field::Q());
    Partition p5 = derive_partition(*lau, 5);
    CHECK(p5.pairs.size() == 1);
    CHECK(p5.pairs[0].u.degree == 5);
    CHECK(verify_partition(*lau, p5).ok);
    Partition p0 = derive_partition(*lau, 0);
    CHECK(p0.pairs.size() == 1);
    CHECK(verify_partition(*lau, p0).ok);

    RingPtr r = bundled_abcd(Field::Q());
    Partition p2 = derive_partition(*r, 2);
    REQUIRE(p2.pairs.size() == 4);
    // exactly (A^2,B^2), (AC,DB), (CA,BD), (C^2,D^2) in tuple order
    GradedScalar A = abcd_var(r, 0), B = abcd_var(r, 1), C = abcd_var(r, 2), D = abcd_var(r, 3);
    auto gs = [&](const Homog& h) { return GradedScalar::from_homog(r, h); };
    CHECK(gs(p2.pairs[0].u) == A * A);
    CHECK(gs(p2.pairs[0].v) == B * B);
    CHECK(gs(p2.pairs[1].u) == A * C);
    CHECK(gs(p2.pairs[1].v) == D * B);
    CHECK(gs(p2.pairs[2].u) == C * A);
    CHECK(gs(p2.pairs[2].v) == B * D);
    CHECK(gs(p2.pairs[3].u) == C * C);
    CHECK(gs(p2.pairs[3].v) == D * D);
    CHECK(verify_partition(*r, p2).ok);
}

TEST_CASE("verify_partition rejects a non-partition") {
    RingPtr r = bundled_abcd(Field::Q());
    Partition bad{1, {r->pou_plus().pairs[0]}};  // only (A, B): sum is 1 - CD
    auto res = verify_partition(*r, bad);
    CHECK_FALSE(res.ok);
}

TEST_CASE("partition powers verify for |n| <= 6 on all three rings") {
    for (const Field& f : {Field::Q(), Field::Fp(101)}) {
        for (const RingPtr& r : {bundled_laurent(f), bundled_twisted(f), bundled_abcd(f)}) {
            for (int n = -6; n <= 6; ++n) {
                Partition p = derive_partition(*r, n);
                auto res = verify_partition(*r, p);
                CHECK_MESSAGE(res.ok, "n=", n, ": ", res.message);
            }
        }
    }
}

TEST_CASE("twisted laurent multiplication twists through the automorphism") {
    RingPtr r = bundled_twisted(Field::Q());
    const Field& f = r->field();
    // e1 s * e1 s = e1 phi(e1) s^2 = e1 e2 s^2 = 0
    Homog e1s = r->h_from_coords(1, {Scalar::one(f), Scalar::zero(f)});
    Homog prod = r->h_mul(e1s, e1s);
    CHECK(r->h_is_zero(prod));
    // e1 s * e2 s = e1 phi(e2) s^2 = e1 e1 s^2 = e1 s^2
    Homog e2s = r->h_from_coords(1, {Scalar::zero(f), Scalar::one(f)});
    Homog prod2 = r->h_mul(e1s, e2s);
    CHECK(prod2.degree == 2);
    CHECK(r->h_coords(prod2)[0].is_one());
    CHECK(r->h_coords(prod2)[1].is_zero());
}

TEST_CASE("reverse_grading is an involution and swaps partitions") {
    for (const RingPtr& r :
         {bundled_laurent(Field::Q()), bundled_twisted(Field::Q()), bundled_abcd(Field::Q())}) {
        RingPtr rev = r->reversed();
        RingPtr back = rev->reversed();
        CHECK(back->same(*r));
        CHECK(verify_partition(*rev, rev->pou_plus()).ok);
        CHECK(verify_partition(*rev, rev->pou_minus()).ok);
        // values round-trip
        Rng rng(3);
        GradedScalar g = random_graded(r, rng, -2, 2, 3);
        CHECK(g.reversed(rev).reversed(back) == g);
    }
    RingPtr abcd = bundled_abcd(Field::Q());
    RingPtr rev = abcd->reversed();
    CHECK(rev->var_degrees() == std::vector<int>{-1, 1, -1, 1});
}

TEST_CASE("graded product is associative and distributive on samples") {
    for (const RingPtr& r :
         {bundled_laurent(Field::Q()), bundled_twisted(Field::Fp(101)), bundled_abcd(Field::Q())}) {
        Rng rng(11);
        for (int i = 0; i < 20; ++i) {
            GradedScalar a = random_graded(r, rng, -2, 2, 2);
            GradedScalar b = random_graded(r, rng, -2, 2, 2);
            GradedScalar c = random_graded(r, rng, -2, 2, 2);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            // graded components of the product collect matching degree pairs
            GradedScalar prod = a * b;
            for (const auto& [g, h] : prod.components()) {
                Homog acc = r->h_zero(g);
                for (const auto& [da, ha] : a.components()) {
                    auto it = b.components().find(g - da);
                    if (it != b.components().end()) acc = r->h_add(acc, r->h_mul(ha, it->second));
                }
                CHECK(r->h_eq(acc, h));
            }
        }
    }
}
