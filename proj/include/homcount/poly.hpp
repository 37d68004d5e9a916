// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "homcount/arith.hpp"

namespace homcount {

// Univariate polynomial over Q. Coefficients are stored in ascending degree
// with no trailing zeros; the zero polynomial is the empty sequence and
// reports degree -1 (standing in for degree -infinity).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs);

    static RatPoly constant(const BigRat& c);
    static RatPoly variable();
    static RatPoly monomial(const BigRat& c, int deg);
    static RatPoly from_ints(std::initializer_list<long> ascending);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat coeff(int k) const;
    const BigRat& leading() const;

    bool integral() const;
    bool monic() const;
    bool nonneg_coeffs() const;

    BigRat operator()(const BigRat& x) const;
    // Evaluation at an integer point; requires the value to be an integer.
    BigInt eval_int(const BigInt& x) const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const BigRat& c) const;
    RatPoly pow(unsigned exp) const;

    RatPoly shifted(const BigRat& c) const;  // P(t + c)
    RatPoly reversed() const;                // t^deg P(1/t)

    bool operator==(const RatPoly& o) const = default;

    std::string str(const std::string& var = "t", bool latex = false) const;
    std::string key() const;

private:
    std::vector<BigRat> c_;
    void trim();
};

struct PolyDivResult {
    RatPoly quot;
    RatPoly rem;
};

// Euclidean division a = quot * b + rem with deg(rem) < deg(b); b != 0.
PolyDivResult poly_divmod(const RatPoly& a, const RatPoly& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

struct UnitFactorization {
    int exponent;      // multiplicity of (t - 1)
    RatPoly cofactor;  // cofactor(1) != 0
};

// Writes p = (t-1)^exponent * cofactor; p must be nonzero.
UnitFactorization extract_unit_factor(const RatPoly& p);

RatPoly shift_poly(const RatPoly& p, const BigRat& c);

}  // namespace homcount
