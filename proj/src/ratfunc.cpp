// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/ratfunc.hpp"

namespace homcount {

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "zero_denominator", "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = RatPoly::constant(BigRat(1));
        return;
    }
    RatPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).quot;
        den_ = poly_divmod(den_, g).quot;
    }
    BigRat lead = den_.leading();
    if (lead != 1) {
        BigRat inv = BigRat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::one() { return RatFunc(RatPoly::constant(BigRat(1))); }

const RatPoly& RatFunc::as_poly() const {
    require(is_polynomial(), "not_polynomial",
            "rational function is not a polynomial: " + str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.reciprocal(); }

RatFunc RatFunc::reciprocal() const {
    require(!is_zero(), "zero_denominator", "reciprocal of the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::scaled(const BigRat& c) const { return RatFunc(num_.scaled(c), den_); }

BigRat RatFunc::operator()(const BigRat& x) const {
    BigRat d = den_(x);
    require(d != 0, "pole", "evaluation at a pole");
    return num_(x) / d;
}

std::vector<BigRat> RatFunc::series(int order) const {
    require(order >= 0, "domain", "series order must be non-negative");
    BigRat d0 = den_.coeff(0);
    require(d0 != 0, "pole", "power series at a pole of the denominator");
    std::vector<BigRat> out(static_cast<std::size_t>(order) + 1, BigRat(0));
    for (int k = 0; k <= order; ++k) {
        BigRat acc = num_.coeff(k);
        for (int j = 1; j <= std::min(k, den_.degree()); ++j)
            acc -= den_.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc / d0;
    }
    return out;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RatFunc reverse_substitute(const RatFunc& f, long power) {
    if (f.is_zero()) return RatFunc();
    long shift = power + f.den().degree() - f.num().degree();
    RatPoly num = f.num().reversed();
    RatPoly den = f.den().reversed();
    if (shift >= 0)
        num = num * RatPoly::monomial(BigRat(1), static_cast<int>(shift));
    else
        den = den * RatPoly::monomial(BigRat(1), static_cast<int>(-shift));
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace homcount
