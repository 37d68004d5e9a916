// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/matrix.hpp"

#include <sstream>

namespace homcount {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "dimension", "negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, BigInt(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    require(rows >= 0 && cols >= 0, "dimension", "negative matrix dimension");
    require(e_.size() == static_cast<std::size_t>(rows) * cols, "dimension",
            "entry count does not match matrix shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "dimension", "ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<BigInt>> big;
    big.reserve(rows.size());
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    return from_rows(big);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, "dimension", "matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const BigInt& b = o.at(k, j);
                if (b == 0) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "dimension", "matrix sum shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "dimension", "matrix difference shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
    return out;
}

IntMatrix IntMatrix::scaled(const BigInt& c) const {
    IntMatrix out = *this;
    for (auto& x : out.e_) x *= c;
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::pow(unsigned exp) const {
    require(square(), "not_square", "matrix power of a non-square matrix");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (exp) {
        if (exp & 1u) acc = acc * base;
        base = base * base;
        exp >>= 1u;
    }
    return acc;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
    require(static_cast<int>(v.size()) == cols_, "dimension", "matrix-vector shape mismatch");
    std::vector<BigInt> out(static_cast<std::size_t>(rows_), BigInt(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const BigInt& a = at(i, j);
            if (a == 0) continue;
            out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
        }
    return out;
}

bool IntMatrix::is_identity() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntMatrix::key() const {
    std::ostringstream out;
    out << rows_ << "x" << cols_ << ":";
    for (const auto& x : e_) out << x.get_str() << ",";
    return out.str();
}

BigInt det(const IntMatrix& m) {
    require(m.square(), "not_square", "determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return BigInt(1);
    IntMatrix a = m;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    BigInt result = a.at(n - 1, n - 1);
    if (sign < 0) result = -result;
    return result;
}

namespace {

// Row/column elementary operations that keep u * m * v = a in sync.
struct SnfWork {
    IntMatrix a, u, v;

    void swap_rows(int i, int j) {
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const BigInt& c) {
        for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += c * a.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
    }
    void add_col(int dst, int src, const BigInt& c) {
        for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += c * a.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
    }
    void negate_row(int i) {
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    SnfWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    int steps = std::min(rows, cols);

    for (int t = 0; t < steps; ++t) {
        bool block_zero = false;
        for (;;) {
            // Pivot: minimal nonzero absolute value in the trailing block.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (w.a.at(i, j) == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(w.a.at(i, j).get_mpz_t(), w.a.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                block_zero = true;
                break;
            }
            if (pi != t) w.swap_rows(t, pi);
            if (pj != t) w.swap_cols(t, pj);

            bool again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (w.a.at(i, t) == 0) continue;
                BigInt q = w.a.at(i, t) / w.a.at(t, t);  // truncated
                if (q != 0) w.add_row(i, t, -q);
                if (w.a.at(i, t) != 0) again = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (w.a.at(t, j) == 0) continue;
                BigInt q = w.a.at(t, j) / w.a.at(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.a.at(t, j) != 0) again = true;
            }
            if (again) continue;

            // Pivot must divide every remaining entry for the divisor chain.
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i)
                for (int j = t + 1; j < cols && fixed; ++j)
                    if (!mpz_divisible_p(w.a.at(i, j).get_mpz_t(), w.a.at(t, t).get_mpz_t())) {
                        w.add_row(t, i, BigInt(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (block_zero) break;
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }
    return {w.u, w.a, w.v};
}

std::vector<BigInt> elementary_divisors(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    std::vector<BigInt> out;
    int n = std::min(s.d.rows(), s.d.cols());
    for (int i = 0; i < n; ++i) out.push_back(s.d.at(i, i));
    return out;
}

int matrix_order(const IntMatrix& m, int cap) {
    require(m.square(), "not_square", "order of a non-square matrix");
    require(cap >= 1, "domain", "order cap must be positive");
    if (m.rows() == 0) return 1;
    BigInt d = det(m);
    require(d == 1 || d == -1, "not_invertible",
            "matrix is not invertible over the integers (det = " + d.get_str() + ")");
    IntMatrix p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    fail("order_cap", "matrix order exceeds cap " + std::to_string(cap));
}

namespace {

// Signed permutation matrices factor as a product of (1 - sign t^len) over
// the signed cycles; Weyl groups of the classical types consist of exactly
// these, so the Molien sums lean on this path.
bool signed_perm_charpoly(const IntMatrix& m, RatPoly& out) {
    int n = m.rows();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<int> sign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const BigInt& x = m.at(i, j);
            if (x == 0) continue;
            if ((x != 1 && x != -1) || image[static_cast<std::size_t>(j)] >= 0) return false;
            image[static_cast<std::size_t>(j)] = i;
            sign[static_cast<std::size_t>(j)] = x == 1 ? 1 : -1;
        }
        if (image[static_cast<std::size_t>(j)] < 0) return false;
    }
    std::vector<bool> row_hit(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
        if (row_hit[static_cast<std::size_t>(image[static_cast<std::size_t>(j)])]) return false;
        row_hit[static_cast<std::size_t>(image[static_cast<std::size_t>(j)])] = true;
    }
    RatPoly acc = RatPoly::constant(BigRat(1));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0, eps = 1, cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            eps *= sign[static_cast<std::size_t>(cur)];
            cur = image[static_cast<std::size_t>(cur)];
            ++len;
        } while (cur != start);
        std::vector<BigRat> factor(static_cast<std::size_t>(len) + 1, BigRat(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(len)] = -eps;
        acc = acc * RatPoly(std::move(factor));
    }
    out = std::move(acc);
    return true;
}

}  // namespace

RatPoly reverse_charpoly(const IntMatrix& m) {
    require(m.square(), "not_square", "characteristic polynomial of a non-square matrix");
    int n = m.rows();
    RatPoly fast;
    if (signed_perm_charpoly(m, fast)) return fast;
    // Faddeev-LeVerrier: det(tI - m) = sum c_k t^(n-k); every division is exact.
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    IntMatrix acc = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        BigInt tr(0);
        for (int i = 0; i < n; ++i) tr += acc.at(i, i);
        BigInt ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        c[static_cast<std::size_t>(k)] = ck;
        for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    // det(I - t m) has coefficient c_k on t^k.
    std::vector<BigRat> out;
    out.reserve(c.size());
    for (const auto& x : c) out.emplace_back(x);
    return RatPoly(std::move(out));
}

}  // namespace homcount
