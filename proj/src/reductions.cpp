// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/reductions.hpp"

namespace homcount {

RatPoly unipotent_factor(const RatPoly& p, int d) {
    require(d >= 0, "domain", "unipotent dimension must be non-negative");
    if (p.is_zero() || d == 0) return p;
    return p * RatPoly::monomial(BigRat(1), d);
}

RatPoly parabolic_factor(const RatPoly& p, const RatPoly& flag) {
    require(flag.nonneg_coeffs(), "flag_negative",
            "flag polynomial must have non-negative coefficients");
    require(flag.coeff(0) == 1, "flag_negative", "flag polynomial must have constant term 1");
    return p * flag;
}

RatPoly normalizer_shift(const RatPoly& p, int m) {
    require(m >= 0, "domain", "normalizer shift must be non-negative");
    if (m == 0 || p.is_zero()) return p;
    PolyDivResult d = poly_divmod(p, RatPoly::monomial(BigRat(1), m));
    require(d.rem.is_zero(), "not_divisible",
            "t^" + std::to_string(m) + " does not divide the polynomial");
    return d.quot;
}

RatPoly replay(const ReductionTrace& trace) {
    RatPoly p = trace.base;
    for (const auto& step : trace.steps) {
        switch (step.kind) {
            case ReductionStep::Kind::Unipotent:
                p = unipotent_factor(p, step.amount);
                break;
            case ReductionStep::Kind::Parabolic:
                p = parabolic_factor(p, step.flag);
                break;
            case ReductionStep::Kind::NormalizerShift:
                p = normalizer_shift(p, step.amount);
                break;
        }
    }
    return p;
}

}  // namespace homcount
