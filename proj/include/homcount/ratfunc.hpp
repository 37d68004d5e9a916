// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "homcount/poly.hpp"

namespace homcount {

// Reduced rational function num/den over Q. The denominator is monic and
// coprime to the numerator, so equality of values is structural equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(RatPoly::constant(BigRat(1))) {}
    explicit RatFunc(RatPoly num) : RatFunc(std::move(num), RatPoly::constant(BigRat(1))) {}
    RatFunc(RatPoly num, RatPoly den);

    static RatFunc one();

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Requires is_polynomial().
    const RatPoly& as_poly() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc reciprocal() const;
    RatFunc scaled(const BigRat& c) const;

    bool operator==(const RatFunc& o) const = default;

    BigRat operator()(const BigRat& x) const;

    // Power-series coefficients c_0..c_order; requires den(0) != 0.
    std::vector<BigRat> series(int order) const;

    std::string str(const std::string& var = "t") const;

private:
    RatPoly num_;
    RatPoly den_;
    void normalize();
};

inline RatFunc ratfunc_normalize(RatPoly num, RatPoly den) {
    return RatFunc(std::move(num), std::move(den));
}

// s^power * f(1/s) as a rational function of s.
RatFunc reverse_substitute(const RatFunc& f, long power);

}  // namespace homcount
