// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "homcount/matrix.hpp"

namespace homcount::oracle {

// Table-based finite field F_q with q = p^m <= 2048. Elements are encoded as
// integers 0..q-1 whose base-p digits are the coefficients of the residue
// polynomial; multiplication goes through log/antilog tables over a fixed
// generator of the multiplicative group. The field axioms are verified
// exhaustively at construction for q <= 64.
class SmallField {
public:
    using Elt = long;

    SmallField(int p, int m);
    static SmallField of_order(long q);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    long order() const { return q_; }
    // Coefficients of the irreducible modulus, ascending, including the
    // leading 1; recorded so outputs are reproducible.
    const std::vector<int>& modulus() const { return modulus_; }
    Elt generator() const { return generator_; }

    Elt from_int(long k) const;  // prime-subfield embedding
    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt pow(Elt a, long e) const;
    Elt frobenius(Elt a) const { return pow(a, p_); }
    bool is_square(Elt a) const;

private:
    int p_, m_;
    long q_;
    std::vector<int> modulus_;
    Elt generator_ = 0;
    std::vector<Elt> exp_table_;  // generator^k, k = 0..q-2
    std::vector<long> log_table_;

    Elt mul_slow(Elt a, Elt b) const;  // polynomial product mod modulus
    void check_axioms() const;
};

// |{(x, y) : x^2 - a y^2 = b}| by full enumeration; a, b nonzero.
long conic_count(SmallField::Elt a, SmallField::Elt b, const SmallField& f);

// Number of partial flags with the given dimension profile in f^n,
// enumerated through reduced row-echelon representatives.
long flag_count(const SmallField& f, int n, const std::vector<int>& dims);

enum class PairMode { Ordered, UnorderedVariety };

// Ordered: ordered pairs of distinct points of P^1(f). UnorderedVariety:
// Frobenius-stable unordered pairs of distinct points of P^1 over the
// quadratic extension of f.
long p1_pair_count(const SmallField& f, PairMode mode);

// Solutions of q a x = x on (Z/(q^s - 1))^h by full enumeration, s being the
// split degree (a^s must be the identity). Domain capped at 10^7 points.
long twisted_torus_count(const IntMatrix& a, long q, int split_degree);

// Closed-form count for the family X_r = GL(2r)/H_r at a prime power q.
BigInt glr_closed_form(int r, const BigInt& q);

// Decomposes q = p^m with p prime; false when q is not a prime power > 1.
bool is_prime_power(long q, int& p, int& m);

}  // namespace homcount::oracle
