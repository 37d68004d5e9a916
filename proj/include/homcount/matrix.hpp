// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "homcount/poly.hpp"

namespace homcount {

// Dense integer matrix with arbitrary-precision entries, row-major.
// The 0x0 matrix is valid and acts as the identity on the rank-0 lattice.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<BigInt> entries);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const BigInt& c) const;
    IntMatrix transposed() const;
    IntMatrix pow(unsigned exp) const;  // square only
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

    bool is_identity() const;
    bool operator==(const IntMatrix& o) const = default;

    // Canonical string form, usable as a hash key.
    std::string key() const;

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination; det of 0x0 is 1.
BigInt det(const IntMatrix& m);

struct SnfResult {
    IntMatrix u, d, v;  // u * m * v = d, u and v unimodular, d_1 | d_2 | ...
};

SnfResult smith_normal_form(const IntMatrix& m);

// Non-negative diagonal of the Smith form.
std::vector<BigInt> elementary_divisors(const IntMatrix& m);

// Smallest k <= cap with m^k = I; errors out past the cap or when m is not
// invertible over the integers.
int matrix_order(const IntMatrix& m, int cap = 1000);

// det(I - t m); integer coefficients, constant term 1 (the 0x0 case gives 1).
RatPoly reverse_charpoly(const IntMatrix& m);

}  // namespace homcount
