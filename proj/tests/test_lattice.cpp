// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcount/matrix.hpp"
#include "test_util.hpp"

using namespace homcount;
using testutil::Rng;

TEST_CASE("determinant spec cases") {
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix::from_ints({{-1}})) == -1);
    CHECK(det(IntMatrix::from_ints({{-1, 2}, {2, -1}})) == -3);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), Error);
}

TEST_CASE("determinant against Leibniz expansion") {
    Rng rng(7);
    for (int it = 0; it < 80; ++it) {
        int n = static_cast<int>(rng.range(1, 5));
        IntMatrix m = testutil::random_matrix(rng, n, n);
        CHECK(det(m) == testutil::leibniz_det(m));
    }
}

TEST_CASE("smith normal form spec cases") {
    auto s1 = smith_normal_form(IntMatrix::identity(2));
    CHECK(s1.d == IntMatrix::identity(2));

    auto s2 = smith_normal_form(IntMatrix::from_ints({{2, 0}, {0, 3}}));
    CHECK(s2.d.at(0, 0) == 1);
    CHECK(s2.d.at(1, 1) == 6);

    auto s3 = smith_normal_form(IntMatrix::from_ints({{1, -1}}));
    CHECK(s3.d.at(0, 0) == 1);
    CHECK(s3.d.at(0, 1) == 0);
}

TEST_CASE("smith normal form invariants on random matrices") {
    Rng rng(17);
    for (int it = 0; it < 60; ++it) {
        int r = static_cast<int>(rng.range(1, 5));
        int c = static_cast<int>(rng.range(1, 5));
        IntMatrix m = testutil::random_matrix(rng, r, c, -9, 9);
        auto s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        int k = std::min(r, c);
        for (int i = 0; i < k; ++i) {
            CHECK(s.d.at(i, i) >= 0);
            for (int j = 0; j < c; ++j)
                if (j != i) CHECK(s.d.at(i, j) == 0);
            if (i + 1 < k && s.d.at(i, i) != 0 && s.d.at(i + 1, i + 1) != 0)
                CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            if (s.d.at(i, i) == 0 && i + 1 < k) CHECK(s.d.at(i + 1, i + 1) == 0);
        }
        if (r == c) {
            BigInt prod(1);
            for (int i = 0; i < k; ++i) prod *= s.d.at(i, i);
            CHECK(prod == abs(det(m)));
        }
    }
}

TEST_CASE("matrix order spec cases") {
    CHECK(matrix_order(IntMatrix::identity(3)) == 1);
    CHECK(matrix_order(IntMatrix::from_ints({{-1}})) == 2);
    CHECK(matrix_order(IntMatrix::from_ints({{0, -1}, {1, -1}})) == 3);
    CHECK(matrix_order(IntMatrix(0, 0)) == 1);
    // Infinite order trips the cap.
    CHECK_THROWS_AS(matrix_order(IntMatrix::from_ints({{1, 1}, {0, 1}}), 50), Error);
    CHECK_THROWS_AS(matrix_order(IntMatrix::from_ints({{2}})), Error);
}

TEST_CASE("matrix order is conjugation invariant") {
    Rng rng(29);
    // Unimodular conjugators out of row operations.
    for (int it = 0; it < 30; ++it) {
        int n = static_cast<int>(rng.range(1, 4));
        IntMatrix m = testutil::random_signed_permutation(rng, n);
        IntMatrix u = IntMatrix::identity(n);
        for (int k = 0; k < 3; ++k) {
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n));
            if (i == j) continue;
            IntMatrix e = IntMatrix::identity(n);
            e.at(i, j) = rng.range(-2, 2);
            u = u * e;
        }
        // u^-1 through the adjugate of a unimodular matrix: solve with SNF.
        auto s = smith_normal_form(u);
        // u = U^-1 D V^-1 with D = I, so u^-1 = V U.
        REQUIRE(s.d == IntMatrix::identity(n));
        IntMatrix uinv = s.v * s.u;
        REQUIRE((u * uinv).is_identity());
        CHECK(matrix_order(u * m * uinv) == matrix_order(m));
    }
}

TEST_CASE("reverse charpoly spec cases") {
    CHECK(reverse_charpoly(IntMatrix::from_ints({{-1}})) == RatPoly::from_ints({1, 1}));
    CHECK(reverse_charpoly(IntMatrix::identity(2)) == RatPoly::from_ints({1, -2, 1}));
    CHECK(reverse_charpoly(IntMatrix::from_ints({{0, 1}, {1, 0}})) ==
          RatPoly::from_ints({1, 0, -1}));
    CHECK(reverse_charpoly(IntMatrix(0, 0)) == RatPoly::constant(BigRat(1)));
    CHECK_THROWS_AS(reverse_charpoly(IntMatrix(1, 2)), Error);
}

TEST_CASE("reverse charpoly against Leibniz expansion") {
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        int n = static_cast<int>(rng.range(1, 4));
        IntMatrix m = testutil::random_matrix(rng, n, n);
        CHECK(reverse_charpoly(m) == testutil::leibniz_reverse_charpoly(m));
    }
    // Signed permutations take the cycle-type path; compare it to the same
    // oracle.
    for (int it = 0; it < 50; ++it) {
        int n = static_cast<int>(rng.range(1, 5));
        IntMatrix m = testutil::random_signed_permutation(rng, n);
        CHECK(reverse_charpoly(m) == testutil::leibniz_reverse_charpoly(m));
    }
}

TEST_CASE("reverse charpoly properties") {
    Rng rng(43);
    for (int it = 0; it < 40; ++it) {
        int n = static_cast<int>(rng.range(1, 5));
        IntMatrix m = testutil::random_matrix(rng, n, n);
        RatPoly p = reverse_charpoly(m);
        CHECK(p(BigRat(0)) == 1);
        CHECK(p.integral());
    }
    // Finite-order m of size d divides (1 - t^k)^d.
    for (int it = 0; it < 30; ++it) {
        int n = static_cast<int>(rng.range(1, 4));
        IntMatrix m = testutil::random_signed_permutation(rng, n);
        int k = matrix_order(m);
        RatPoly p = reverse_charpoly(m);
        std::vector<BigRat> cyc(static_cast<std::size_t>(k) + 1, BigRat(0));
        cyc[0] = 1;
        cyc[static_cast<std::size_t>(k)] = -1;
        RatPoly big = RatPoly(std::move(cyc)).pow(static_cast<unsigned>(n));
        CHECK(poly_divmod(big, p).rem.is_zero());
    }
}
