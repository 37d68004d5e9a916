// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "homcount/poly.hpp"

namespace homcount {

// Counting-polynomial bookkeeping for reductions of a general homogeneous
// space to the reductive/toral core: a unipotent fibration multiplies by
// t^d, a parabolic fibration by the flag polynomial, and passing to the
// torus normalizer divides by t^m.

RatPoly unipotent_factor(const RatPoly& p, int d);
RatPoly parabolic_factor(const RatPoly& p, const RatPoly& flag);
RatPoly normalizer_shift(const RatPoly& p, int m);

struct ReductionStep {
    enum class Kind { Unipotent, Parabolic, NormalizerShift };
    Kind kind;
    int amount = 0;  // d or m
    RatPoly flag;    // parabolic steps only
};

struct ReductionTrace {
    RatPoly base;
    std::vector<ReductionStep> steps;
};

// Applies the steps in order; each intermediate must stay polynomial.
RatPoly replay(const ReductionTrace& trace);

}  // namespace homcount
