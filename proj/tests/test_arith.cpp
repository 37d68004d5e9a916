// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcount/ratfunc.hpp"
#include "test_util.hpp"

using namespace homcount;
using testutil::Rng;

TEST_CASE("rationals are canonical") {
    BigRat r(6, -4);
    r.canonicalize();
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(rat_from_string("6/4") == BigRat(3, 2));
    CHECK(rat_from_string("-12") == BigRat(-12));
    CHECK(rat_to_string(BigRat(3, 2)) == "3/2");
    CHECK(rat_to_string(BigRat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(big_from_string("12x"), Error);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("polynomial basics") {
    RatPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(RatPoly(std::vector<BigRat>{BigRat(0), BigRat(0)}).is_zero());

    RatPoly p = RatPoly::from_ints({0, -1, 1});  // t^2 - t
    CHECK(p.degree() == 2);
    CHECK(p(BigRat(3)) == BigRat(6));
    CHECK(p.eval_int(BigInt(5)) == 20);
    CHECK(p.str() == "t^2 - t");
    CHECK(p.str("t", true) == "t^{2} - t");

    CHECK((p * RatPoly()).is_zero());
    CHECK(p.reversed() == RatPoly::from_ints({1, -1}));
}

TEST_CASE("divmod and gcd") {
    RatPoly a = RatPoly::from_ints({-1, 0, 1});  // t^2 - 1
    RatPoly b = RatPoly::from_ints({-1, 1});     // t - 1
    auto d = poly_divmod(a, b);
    CHECK(d.quot == RatPoly::from_ints({1, 1}));
    CHECK(d.rem.is_zero());
    CHECK(poly_gcd(a, b) == b);
    CHECK_THROWS_AS(poly_divmod(a, RatPoly()), Error);

    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        RatPoly x = testutil::random_poly(rng, 6);
        RatPoly y = testutil::random_nonzero_poly(rng, 4);
        auto qr = poly_divmod(x, y);
        CHECK(qr.quot * y + qr.rem == x);
        CHECK(qr.rem.degree() < y.degree());
    }
}

TEST_CASE("ratfunc_normalize spec cases") {
    RatFunc a = ratfunc_normalize(RatPoly::from_ints({-1, 0, 1}), RatPoly::from_ints({-1, 1}));
    CHECK(a.as_poly() == RatPoly::from_ints({1, 1}));  // (t^2-1)/(t-1) = t+1

    RatFunc b = ratfunc_normalize(RatPoly(), RatPoly::from_ints({0, 0, 0, 1}));
    CHECK(b.is_zero());
    CHECK(b.den() == RatPoly::constant(BigRat(1)));

    RatFunc c = ratfunc_normalize(RatPoly::from_ints({2, 2}), RatPoly::from_ints({2}));
    CHECK(c.as_poly() == RatPoly::from_ints({1, 1}));

    CHECK_THROWS_AS(ratfunc_normalize(RatPoly::from_ints({1}), RatPoly()), Error);
}

TEST_CASE("extract_unit_factor spec cases") {
    auto a = extract_unit_factor(RatPoly::from_ints({0, 0, -1, 1}));  // t^3 - t^2
    CHECK(a.exponent == 1);
    CHECK(a.cofactor == RatPoly::from_ints({0, 0, 1}));

    auto b = extract_unit_factor(RatPoly::from_ints({0, 1, 1}));  // t^2 + t
    CHECK(b.exponent == 0);
    CHECK(b.cofactor == RatPoly::from_ints({0, 1, 1}));

    auto c = extract_unit_factor(RatPoly::from_ints({1, -2, 1}));  // (t-1)^2
    CHECK(c.exponent == 2);
    CHECK(c.cofactor == RatPoly::constant(BigRat(1)));

    CHECK_THROWS_AS(extract_unit_factor(RatPoly()), Error);
}

TEST_CASE("extract_unit_factor adds exponents") {
    Rng rng(23);
    RatPoly unit = RatPoly::from_ints({-1, 1});
    for (int it = 0; it < 40; ++it) {
        RatPoly p = testutil::random_nonzero_poly(rng, 8);
        int k = static_cast<int>(rng.below(4));
        auto base = extract_unit_factor(p);
        auto lifted = extract_unit_factor(p * unit.pow(static_cast<unsigned>(k)));
        CHECK(lifted.exponent == base.exponent + k);
        CHECK(lifted.cofactor == base.cofactor);
    }
}

TEST_CASE("shift_poly spec cases and involution") {
    CHECK(shift_poly(RatPoly::from_ints({0, 1, 1}), BigRat(1)) == RatPoly::from_ints({2, 3, 1}));
    CHECK(shift_poly(RatPoly::from_ints({0, 0, 1}), BigRat(1)) == RatPoly::from_ints({1, 2, 1}));
    CHECK(shift_poly(RatPoly::from_ints({-1, 1}), BigRat(1)) == RatPoly::from_ints({0, 1}));

    Rng rng(37);
    for (int it = 0; it < 40; ++it) {
        RatPoly p = testutil::random_poly(rng, 7);
        CHECK(shift_poly(shift_poly(p, BigRat(1)), BigRat(-1)) == p);
    }
}

TEST_CASE("ratfunc arithmetic properties") {
    Rng rng(41);
    auto random_func = [&](int deg) {
        return RatFunc(testutil::random_poly(rng, deg), testutil::random_nonzero_poly(rng, deg));
    };
    for (int it = 0; it < 30; ++it) {
        RatFunc f = random_func(4), g = random_func(4), h = random_func(4);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        // Normalization is idempotent.
        CHECK(RatFunc(f.num(), f.den()) == f);
    }
}

TEST_CASE("series times denominator reproduces numerator") {
    Rng rng(53);
    for (int it = 0; it < 30; ++it) {
        RatPoly den = testutil::random_nonzero_poly(rng, 4);
        if (den.coeff(0) == 0) continue;
        RatPoly num = testutil::random_poly(rng, 4);
        RatFunc f(num, den);
        int order = 12;
        std::vector<BigRat> s = f.series(order);
        // Multiply the truncated series back by the reduced denominator.
        RatPoly st(std::move(s));
        RatPoly prod = st * f.den();
        for (int k = 0; k + f.den().degree() <= order && k <= f.num().degree(); ++k)
            CHECK(prod.coeff(k) == f.num().coeff(k));
    }
}

TEST_CASE("reverse_substitute inverts powers") {
    // s^2 * (t+1 at 1/s) = s + s^2
    RatFunc f(RatPoly::from_ints({1, 1}));
    RatFunc g = reverse_substitute(f, 2);
    CHECK(g.as_poly() == RatPoly::from_ints({0, 1, 1}));

    // s * (1/(1-t) at 1/s) = s^2/(s-1)
    RatFunc h(RatPoly::constant(BigRat(1)), RatPoly::from_ints({1, -1}));
    RatFunc rev = reverse_substitute(h, 1);
    CHECK(rev == RatFunc(RatPoly::from_ints({0, 0, 1}), RatPoly::from_ints({-1, 1})));
}
