#include <doctest.h>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"
#include "grnov/novikov.hpp"

using namespace grnov;

TEST_CASE("truncated novikov arithmetic tracks exactness windows") {
    RingPtr r = bundled_laurent(Field::Q());
    const Field& f = r->field();
    // geometric series sum t^j on [0, 8]
    std::map<int, Homog> comps;
    for (int j = 0; j <= 8; ++j) comps.emplace(j, r->h_from_coeff(j, Scalar::one(f)));
    TruncNov x = TruncNov::from_components(r, 0, 8, std::move(comps));
    GradedScalar onemt(r);
    onemt.add_component(r->h_from_coeff(0, Scalar::one(f)));
    onemt.add_component(r->h_from_coeff(1, Scalar::from_int(f, -1)));
    TruncNov prod = TruncNov::from_graded(onemt) * x;
    // (1 - t) sum t^j = 1 exactly on degrees <= 8
    CHECK(prod.hi() >= 8);
    TruncNov one = TruncNov::from_graded(GradedScalar::one(r));
    CHECK((prod - one).is_zero_up_to(8));
    // multiplication degrades the window by the lowest known degrees
    CHECK(prod.hi() == 8);

    // zero behaves as the exact zero
    TruncNov z = TruncNov::zero(r);
    CHECK(z.is_exact_zero());
    CHECK((z * x).is_exact_zero());
    CHECK((x + z) == x);
}

TEST_CASE("truncnov equality compares the overlap of exactness") {
    RingPtr r = bundled_laurent(Field::Q());
    const Field& f = r->field();
    std::map<int, Homog> a, b;
    for (int j = 0; j <= 5; ++j) a.emplace(j, r->h_from_coeff(j, Scalar::one(f)));
    for (int j = 0; j <= 3; ++j) b.emplace(j, r->h_from_coeff(j, Scalar::one(f)));
    TruncNov x = TruncNov::from_components(r, 0, 5, std::move(a));
    TruncNov y = TruncNov::from_components(r, 0, 3, std::move(b));
    CHECK(x == y);  // equal up to degree 3, the common exactness
    std::map<int, Homog> c;
    c.emplace(0, r->h_from_coeff(0, Scalar::from_int(f, 2)));
    TruncNov w = TruncNov::from_components(r, 0, 3, std::move(c));
    CHECK_FALSE(x == w);
}

TEST_CASE("series-ring splittings at truncation 8") {
    for (const RingPtr& r :
         {bundled_laurent(Field::Q()), bundled_twisted(Field::Fp(101)), bundled_abcd(Field::Q())}) {
        Rng rng(41);
        for (int i = 0; i < 25; ++i) {
            GradedScalar rpoly = random_graded(r, rng, 0, 5, 3);
            CHECK(series_kappa(series_delta(rpoly)) == rpoly);
            SeriesMiddle x{random_graded(r, rng, -4, 4, 3), random_truncnov(r, rng, 0, 8, 3)};
            SeriesMiddle lhs = series_lambda(series_rho(x));
            GradedScalar k = series_kappa(x);
            lhs.laurent = lhs.laurent + k;
            lhs.series = lhs.series + TruncNov::from_graded(k);
            CHECK(lhs.laurent == x.laurent);
            CHECK(lhs.series == x.series);
            TruncNov y = random_truncnov(r, rng, -3, 8, 4);
            CHECK(series_rho(series_lambda(y)) == y);
        }
    }
}

TEST_CASE("grading reversal of truncated series") {
    RingPtr r = bundled_laurent(Field::Q());
    RingPtr rev = r->reversed();
    Rng rng(6);
    TruncNov x = random_truncnov(r, rng, -2, 6, 4);
    TruncNov back = x.reversed(rev).reversed(r);
    CHECK(back == x);
    CHECK(back.lo() == x.lo());
    CHECK(back.hi() == x.hi());
}
