// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "homcount/weyl.hpp"

namespace homcount {

// Unvalidated description of X = G/H: the group G as a root datum, the
// surjection of character lattices cutting out the subtorus H0 of the
// maximal torus, generators of the component group acting on the subtorus
// lattice, and the finite-order Frobenius twist F = q f0.
struct RawSpec {
    RootDatum group;
    IntMatrix restriction;                      // h x rank, all divisors 1
    std::vector<IntMatrix> gamma_generators;    // h x h
    IntMatrix f0;                               // rank x rank
};

// Validated spec. Construction enforces every structural invariant, closes
// the component group, induces the twist on the subtorus lattice, and
// precomputes the per-residue Molien data and counting polynomials;
// instances are immutable afterwards.
class HomogeneousSpec {
public:
    static HomogeneousSpec validate(const RawSpec& raw);

    const RootDatum& root_datum() const { return rd_; }
    const WeylGroup& weyl() const { return weyl_; }
    const IntMatrix& restriction() const { return restriction_; }
    const IntMatrix& twist() const { return f0_; }
    const IntMatrix& induced_twist() const { return f0_h_; }
    const std::vector<IntMatrix>& gamma() const { return gamma_; }

    int period() const { return period_; }
    int twist_order() const { return f0_order_; }
    int lattice_rank() const { return lat_rank_; }  // rank of the subtorus lattice
    long dim_x() const { return dim_x_; }

    const RatFunc& molien_gamma(int residue) const;
    const RatFunc& molien_weyl(int residue) const;
    const RatPoly& group_order(int residue) const;  // residue mod twist_order()
    const RatPoly& polynomial(int residue) const;   // residue mod period()

private:
    HomogeneousSpec() = default;

    RootDatum rd_;
    WeylGroup weyl_;
    IntMatrix restriction_, f0_, f0_h_;
    std::vector<IntMatrix> gamma_;
    int f0_order_ = 1, f0h_order_ = 1, period_ = 1;
    int lat_rank_ = 0;
    long dim_x_ = 0;
    std::vector<RatFunc> molien_gamma_, molien_weyl_;  // by residue mod period
    std::vector<RatPoly> group_order_;                 // by residue mod f0_order
    std::vector<RatPoly> polys_;                       // by residue mod period
};

struct Factorization {
    int r;        // multiplicity of (t - 1), equal to rank G minus dim H
    RatPoly q_x;  // non-negative integer coefficients
};

struct CountingResult {
    int period = 1;
    int minimal_period = 1;
    long dim_x = 0;
    std::vector<RatPoly> polys;    // P_0 .. P_{N-1}
    Factorization factorization;
    std::vector<RatPoly> shifted;  // P_r(t + 1)
    BigInt bound;                  // period bound for the rank of G
};

// P_r with |X(F_{q^n})| = P_r(q^n) whenever n = residue mod period.
RatPoly count_polynomial(const HomogeneousSpec& spec, int residue);

// Exact count via the group-order average; cross-checked against the
// residue polynomial before returning.
BigInt count_at(const HomogeneousSpec& spec, const BigInt& q, int n);

// P_0(s) = (s-1)^r s^(dim-r) q_x(1/s) with q_x having non-negative integer
// coefficients; both facts are enforced.
Factorization factorize(const HomogeneousSpec& spec);

// P_r(t+1) for each residue; every coefficient must be non-negative.
std::vector<RatPoly> shift_certificates(const std::vector<RatPoly>& polys);

// lcm of all n with euler_phi(n) <= rank.
BigInt period_bound(int rank);

CountingResult count_all(const HomogeneousSpec& spec);

}  // namespace homcount
