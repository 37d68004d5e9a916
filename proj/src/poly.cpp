// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/poly.hpp"

#include <sstream>

namespace homcount {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly(std::vector<BigRat>{c}); }

RatPoly RatPoly::variable() { return RatPoly(std::vector<BigRat>{BigRat(0), BigRat(1)}); }

RatPoly RatPoly::monomial(const BigRat& c, int deg) {
    require(deg >= 0, "domain", "monomial degree must be non-negative");
    if (c == 0) return RatPoly();
    std::vector<BigRat> v(static_cast<std::size_t>(deg) + 1, BigRat(0));
    v.back() = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(std::initializer_list<long> ascending) {
    std::vector<BigRat> v;
    v.reserve(ascending.size());
    for (long x : ascending) v.emplace_back(x);
    return RatPoly(std::move(v));
}

BigRat RatPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return BigRat(0);
    return c_[static_cast<std::size_t>(k)];
}

const BigRat& RatPoly::leading() const {
    require(!is_zero(), "domain", "leading coefficient of the zero polynomial");
    return c_.back();
}

bool RatPoly::integral() const {
    for (const auto& c : c_)
        if (!rat_is_integer(c)) return false;
    return true;
}

bool RatPoly::monic() const { return !is_zero() && c_.back() == 1; }

bool RatPoly::nonneg_coeffs() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

BigRat RatPoly::operator()(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt RatPoly::eval_int(const BigInt& x) const { return rat_to_int((*this)(BigRat(x))); }

RatPoly RatPoly::operator-() const {
    std::vector<BigRat> v(c_);
    for (auto& c : v) c = -c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<BigRat> v(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<BigRat> v(c_.size() + o.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const BigRat& c) const {
    if (c == 0) return RatPoly();
    std::vector<BigRat> v(c_);
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(unsigned exp) const {
    RatPoly acc = RatPoly::constant(BigRat(1));
    RatPoly base = *this;
    while (exp) {
        if (exp & 1u) acc = acc * base;
        base = base * base;
        exp >>= 1u;
    }
    return acc;
}

RatPoly RatPoly::shifted(const BigRat& c) const {
    // Horner in the shifted variable: P(t + c).
    RatPoly acc;
    RatPoly lin(std::vector<BigRat>{c, BigRat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + RatPoly::constant(*it);
    return acc;
}

RatPoly RatPoly::reversed() const {
    std::vector<BigRat> v(c_.rbegin(), c_.rend());
    return RatPoly(std::move(v));
}

std::string RatPoly::str(const std::string& var, bool latex) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigRat c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        BigRat a = neg ? BigRat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) out << rat_to_string(a);
        if (k > 0) {
            if (!unit) out << (latex ? " " : "*");
            out << var;
            if (k > 1) {
                if (latex)
                    out << "^{" << k << "}";
                else
                    out << "^" << k;
            }
        }
    }
    return out.str();
}

std::string RatPoly::key() const {
    std::ostringstream out;
    for (const auto& c : c_) out << rat_to_string(c) << ",";
    return out.str();
}

PolyDivResult poly_divmod(const RatPoly& a, const RatPoly& b) {
    require(!b.is_zero(), "zero_denominator", "polynomial division by zero");
    std::vector<BigRat> rem(a.coeffs());
    int db = b.degree();
    int dq = static_cast<int>(rem.size()) - 1 - db;
    if (dq < 0) return {RatPoly(), a};
    std::vector<BigRat> quot(static_cast<std::size_t>(dq) + 1, BigRat(0));
    const BigRat& lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        BigRat q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(BigRat(1) / a.leading());
}

UnitFactorization extract_unit_factor(const RatPoly& p) {
    require(!p.is_zero(), "domain", "cannot factor the zero polynomial");
    RatPoly q = p;
    RatPoly unit = RatPoly::from_ints({-1, 1});
    int e = 0;
    while (q(BigRat(1)) == 0) {
        PolyDivResult d = poly_divmod(q, unit);
        require(d.rem.is_zero(), "internal", "unit factor division left a remainder");
        q = std::move(d.quot);
        ++e;
    }
    return {e, q};
}

RatPoly shift_poly(const RatPoly& p, const BigRat& c) { return p.shifted(c); }

}  // namespace homcount
